"""The minimal A-infinity structure on Ext for n = 1 and n = 2.

For n = 1 every higher product vanishes on the chosen representatives.  For
n = 2 a nonzero m_3 appears and nothing beyond it.
"""

from arcext.ainfty import AInftyModel, stasheff_check
from arcext.dg import get_splitting

for m, n in [(3, 1), (2, 2)]:
    model = AInftyModel(get_splitting(m, n))
    counts = {l: len(model.table(l)) for l in range(3, 7)}
    print(f"({m},{n}): {len(model.classes)} classes, nonzero m_l entries {counts}")

model = AInftyModel(get_splitting(2, 2))
cl = model.classes
print("\nsome m_3 values on (2,2):")
for tup, v in sorted(model.table(3).items())[:6]:
    args = ", ".join(f"{cl[i][0]}->{cl[i][1]}[{cl[i][2]}]" for i in tup)
    out = " + ".join(f"{c}*#{k}" for k, c in v.items())
    print(f"  m3({args}) = {out}")

print("\nStasheff identities through arity 5:", "ok" if not stasheff_check(model, 5) else "FAILED")
