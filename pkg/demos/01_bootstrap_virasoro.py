"""Bootstrap a full product table from two stored relations.

The weight-2 generator w satisfies w_1 w = 2w and w_3 w = -1 (central
charge -2).  Everything else -- w_0 w, w_2 w, all commutators, all normal
forms -- is derived mechanically: skew symmetry fills in the mirrored
products, and the diagonal recursion fills in the even modes from the
stored odd ones.
"""

from zhuforge import (
    apply_mode,
    commutator,
    complete_table,
    evaluate,
    load_bundled,
    normal_form,
)

p = load_bundled("virasoro_c_minus2")
print("presentation:", p.name)
print("generators:  ", ", ".join(
    "%s (weight %d)" % (s, w) for s, w in zip(p.symbols, p.weights)))
print("stored relations:")
for (i, j, k), value in sorted(p.relations.items()):
    print("  %s_%d %s = %s" % (p.symbols[i], k, p.symbols[j],
                               p.render_state(value)))

table = complete_table(p)
print("\ncompleted table (all nonnegative products of w with w):")
for i, j, k, value in table.entries():
    print("  w_%d w = %s" % (k, p.render_state(value) or "0"))
print("derived, not stored: w_0 w = w(-2) and w_2 w = 0.")

print("\nnormal forms reorder modes and absorb the corrections:")
for text in ("w(-1)w(-3)", "w(0)w(-3)", "w(1)w(-1)"):
    s = p.parse_state(text)
    print("  nf(%s) = %s" % (text, p.render_state(normal_form(s, table))))

print("\nevaluated commutators act exactly like single modes:")
comm = commutator((0, 1), (0, -1), table)  # [w_1, w_-1]
for text in ("w(-2)", "w(-3)w(-2)"):
    s = p.parse_state(text)
    got = evaluate(comm, s, table)
    single = apply_mode((0, -1), s, table)
    assert got == {w: 2 * c for w, c in single.items()}
    print("  [w_1, w_-1] %s = %s  (= 2 w_-1 %s)"
          % (text, p.render_state(got), text))
print("\nthe identity [w_1, w_-1] = 2 w_-1 checked on both states.")
