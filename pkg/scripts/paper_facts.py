"""Print the headline back-and-forth facts and Scott complexities.

    python3 scripts/paper_facts.py
"""
from bfscott.engine import Engine
from bfscott.order import CutDescriptor
from bfscott.scott import rank_report, scott_complexity
from bfscott.syntax import parse_expr


def main():
    eng = Engine()
    L = parse_expr("eta_0 + 1_0 + sh(0,1)")
    SH = parse_expr("sh(0,1)")
    A = parse_expr("omega[;1,0]")
    q, p = CutDescriptor([(0,), False, ()]), CutDescriptor([(), True, ()])
    rows = [
        ("Sh(0,1) <=_1 L", eng.leq(SH, L, 1)),
        ("L <=_2 Sh(0,1)", eng.leq(L, SH, 2)),
        ("Sh(0,1) <=_2 L", eng.leq(SH, L, 2)),
        ("q <=_2 p", eng.leq_tuples(L, q, L, p, 2)),
        ("p <=_2 q", eng.leq_tuples(L, p, L, q, 2)),
        ("eta_0 <=_1 Sh(0,1)", eng.leq(parse_expr("eta_0"), SH, 1)),
        ("omega_A*2 <=_3 omega_A", eng.leq(A * 2, A, 3)),
        ("omega_A <=_3 omega_A*2", eng.leq(A, A * 2, 3)),
    ]
    for name, val in rows:
        print(f"{name:28s} {val}")
    print()
    for text in ["", "1_0 + 1_1", "sh(0,1)", "(eta_0 + eta_1) * 3", "eta_0 + 1_0 + eta_0",
                 "eta_0 + 1_0*2 + eta_0", "eta_0 + 1_0*3 + eta_0", "1_0 + eta_0", "omega[;0]",
                 "omega[;1,0]", "eta_0 + 1_0 + sh(0,1)"]:
        e = parse_expr(text)
        tag = scott_complexity(e, engine=eng)
        ranks = ""
        if e.blocks and not e.is_finite:
            r = rank_report(e, engine=eng)
            ranks = f"  SR={r.sr_upper} SR_p={r.srp_upper}"
        print(f"{text or '(empty)':28s} {tag}{ranks}")
    print()
    print("memo", eng.stats_dict())


if __name__ == "__main__":
    main()
