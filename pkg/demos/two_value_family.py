"""Walk through the two-value family h over Q(zeta_3).

Run with:  python3 demos/two_value_family.py
"""

from alexmod.coinvariants import (
    divisibility_check,
    factorization_chain_report,
    global_alexander_module,
    local_alexander_module,
    total_space_homology,
)
from alexmod.laurent import module_from_automorphism
from alexmod.monodromy import conjugacy_check, monodromy_at_infinity, parse_word
from alexmod.worked_examples import B1_LABEL, h_family_rep, jordan_forms


def main():
    jf = jordan_forms()
    for name in ("m1", "m2", "T_inf"):
        print(f"fiber module of {name}: {module_from_automorphism(jf[name])}")

    rep = h_family_rep()
    print("m1 m2 conjugate to T_inf:", conjugacy_check(monodromy_at_infinity(rep), jf["T_inf"]))
    print("  with b = 0:", conjugacy_check(monodromy_at_infinity(h_family_rep(b=0)), jf["T_inf"]))

    print("M(h)      =", global_alexander_module(rep))
    print("M(h, 0)   =", local_alexander_module(rep))
    print("M(h, b1)  =", local_alexander_module(rep.with_distinguished(B1_LABEL)))
    print("case 1    =", global_alexander_module(h_family_rep(case=1)))

    chain = factorization_chain_report(rep)
    print("chain dimensions:", " -> ".join(map(str, chain["dimensions"])))

    for word in ("g2", "g1 g2", "g2 g2 g1^-1"):
        ok, q, ell = divisibility_check(rep, parse_word(word))
        print(f"divisibility for {word!r} (winding {ell}): {ok}, cofactor {q}")

    hom = total_space_homology(rep)
    print("dim H_3(E) =", hom["H_3"], "  H_4(E) =", hom["H_4"], "  euler check:", hom["euler_ok"])


if __name__ == "__main__":
    main()
