"""Brute-force checks on SL2 acting on its natural module and on Singer cycles."""

from __future__ import annotations

from cdgraph.groups import check_Nq, counting_identity, orbits, singer_check, sl2_centralizer_check, sl2_natural

# SL2(5) has order 120 and acts transitively on the 24 nonzero vectors.
act = sl2_natural(5, 1)
print("SL2(5) order:", len(act.group), "orbit sizes:", orbits(act))

# Every nonzero vector's stabilizer has a normal Sylow q-subgroup when q = t.
for t, a in [(2, 2), (2, 3), (5, 1), (7, 1)]:
    act = sl2_natural(t, a)
    q = t
    rep = check_Nq(act, q)
    print(f"SL2({t}^{a}) q={q}: holds={rep.holds} n_q={rep.sylow_count} identity={counting_identity(act, q)}")

# With q = 3 the condition fails and the report lists offending vectors.
rep = check_Nq(sl2_natural(2, 2), 3)
print("SL2(4) q=3:", rep.holds, rep.reason, len(rep.witnesses), "witnesses")

# A Singer cycle centralizes only itself inside GL.
for t, a in [(2, 3), (3, 3), (5, 2)]:
    s = singer_check(t, a)
    print(f"Singer in GL_{a}({t}): centralizer order {s.centralizer_order}, cyclic {s.is_cyclic}")

c = sl2_centralizer_check(2, 2)
print("centralizer of SL2(4) in GL4(2):", c.centralizer_order, c.is_cyclic)
