"""
Reports over the default corpus
===============================

full_report bundles every property and theorem check for one clutter.  The
corpus adds the blockers of the named instances plus a few seeded random
clutters.  Reports serialize to canonical JSON, so two runs compare equal
byte for byte.
"""

import numpy as np

from clutterlab import default_corpus, full_report

rows = []
for label, H in default_corpus(n_random=4):
    rep = full_report(H, name=label)
    p = rep.properties
    rows.append((p["fulkersonian"], p["mengerian_bounded"]["value"], p["normal_up_to"]["value"]))
    print(f"{label:14s} n={H.n} m={H.m}  fulk={p['fulkersonian']!s:5}  "
          f"meng={p['mengerian_bounded']['value']!s:5}  all verdicts pass={rep.all_pass()}")

table = np.array(rows, dtype=bool)
print("Fulkersonian count:", table[:, 0].sum(), "of", len(table))
print("Mengerian implies Fulkersonian and normal:",
      bool(np.all(~table[:, 1] | (table[:, 0] & table[:, 2]))))
