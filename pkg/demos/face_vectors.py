"""h-vectors, Dehn-Sommerville, and the necessity half of the g-theorem.

The octahedron's f-vector transforms to the palindromic h-vector
(1,3,3,1) with M-vector g = (1,2); dropping one facet breaks both
symmetry and the necessity check.  The cyclic polytope C(4,7) passes.
"""

from nctoric.facevectors import g_theorem_necessity, h_from_f, shadow

for f, d, name in [([1, 6, 12, 8], 3, "octahedron"),
                   ([1, 6, 12, 7], 3, "octahedron minus a facet"),
                   ([1, 7, 21, 28, 14], 4, "cyclic polytope C(4,7)")]:
    res = g_theorem_necessity(f, d)
    print("%s: h=%s g=%s pass=%s" % (name, res["h"], res["g"], res["pass"]))

print("Macaulay shadow bounds:",
      [(l, i, shadow(l, i)) for l, i in [(3, 1), (4, 2), (10, 3)]])
