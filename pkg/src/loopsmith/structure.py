"""Named mapping families on M(G, 2) and mechanical checks of their structure.

Families: ``A`` (a_phi, phi ∈ Aut(G), acting on both cosets), ``D`` (d_t, left
translation by t on the coset Gu), ``Z`` (d_z for central z), ``S`` (s_alpha,
permuting the Klein subgroup {1, u, v, uv} when G is generalized dihedral)
and ``J`` (inversion).

Every ``verify_*`` function returns a :class:`StructureVerdict`. Claims whose
hypotheses do not hold on the input are recorded with status
``out_of_scope`` and count as passing. Isomorphisms between the abstract
semidirect products are not materialized; only subgroup products, normality,
quotients and order identities are checked.
"""

from __future__ import annotations

import math
from itertools import permutations
from dataclasses import dataclass, field
from typing import Optional

from .chein import CheinEmbedding
from .errors import NotGeneralizedDihedral
from .groups import (
    ORDER_BOUND,
    FiniteGroup,
    GroupMapping,
    automorphism_group,
    center,
    closure_from_permutations,
    generalized_dihedral_decomposition,
    inner_automorphism_group,
    is_elementary_abelian_2,
    isomorphic,
    validate_group,
)
from .half import (
    HalfGroup,
    Kind,
    gamma,
    h_violations,
    half_group_violations,
    kind_of,
)
from .loops import (
    FiniteLoop,
    Mapping,
    compose,
    generate,
    has_aaip,
    identity_map,
    inverse,
    inversion_mapping,
)


@dataclass
class Claim:
    claim: str
    passed: bool
    detail: dict = field(default_factory=dict)
    status: str = "checked"

    def to_json(self) -> dict:
        return {"claim": self.claim, "pass": self.passed, "status": self.status, "detail": self.detail}


@dataclass
class StructureVerdict:
    claims: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, claim: str, passed: bool, **detail) -> Claim:
        c = Claim(claim, bool(passed), detail)
        self.claims.append(c)
        return c

    def skip(self, claim: str, reason: str) -> Claim:
        c = Claim(claim, True, {"reason": reason}, "out_of_scope")
        self.claims.append(c)
        return c

    def extend(self, other: "StructureVerdict") -> "StructureVerdict":
        self.claims.extend(other.claims)
        return self

    def failed(self) -> list:
        return [c for c in self.claims if not c.passed]

    def to_json(self) -> dict:
        return {"all_pass": self.all_pass, "claims": [c.to_json() for c in self.claims]}


@dataclass(frozen=True)
class NamedFamily:
    label: str
    members: tuple
    provenance: str

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


# -- constructions -----------------------------------------------------------

def build_a_phi(E: CheinEmbedding, phi) -> Mapping:
    images = phi.images if isinstance(phi, GroupMapping) else tuple(phi)
    n = E.n
    return tuple(images) + tuple(n + images[g] for g in range(n))


def build_d_t(E: CheinEmbedding, t: int) -> Mapping:
    n, rows = E.n, E.group.rows
    return tuple(range(n)) + tuple(n + rows[t][g] for g in range(n))


def klein_subgroup(E: CheinEmbedding, v: int) -> tuple:
    """(1, u, v, w) as loop indices, w = uv."""
    u = E.u_index
    return 0, u, v, E.loop.mul(u, v)


def klein_automorphisms(E: CheinEmbedding, v: int) -> list:
    """The six permutations of K fixing 1, as dicts on loop indices."""
    K = klein_subgroup(E, v)
    return [dict(zip(K, (0, *p))) for p in permutations(K[1:])]


def build_s_alpha(E: CheinEmbedding, G0, v: int, alpha: dict) -> Mapping:
    """s_alpha(g x) = g alpha(x) for g ∈ G0 and x ∈ K."""
    G, L = E.group, E.loop
    dec = generalized_dihedral_decomposition(G)
    if dec is None:
        raise NotGeneralizedDihedral("G has no generalized dihedral decomposition")
    members = G0.members if hasattr(G0, "members") else tuple(G0)
    K = klein_subgroup(E, v)
    if set(alpha) != set(K) or sorted(alpha.values()) != sorted(K) or alpha[0] != 0:
        raise ValueError("alpha must permute K = {1, u, v, uv} fixing 1")
    img = [-1] * L.order
    for g in members:
        for x in K:
            img[L.mul(g, x)] = L.mul(g, alpha[x])
    if sorted(img) != list(range(L.order)):
        raise NotGeneralizedDihedral("G0 K does not cover the loop")
    return tuple(img)


def families(E: CheinEmbedding, aut_G: Optional[list] = None) -> dict:
    G = E.group
    if aut_G is None:
        aut_G = automorphism_group(G)
    fam = {
        "A": NamedFamily("A", tuple(build_a_phi(E, p) for p in aut_G), "a_phi over Aut(G)"),
        "D": NamedFamily("D", tuple(build_d_t(E, t) for t in range(G.order)), "d_t over G"),
        "Z": NamedFamily("Z", tuple(build_d_t(E, z) for z in center(G)), "d_z over Z(G)"),
        "J": NamedFamily("J", (inversion_mapping(E.loop),), "inversion"),
    }
    dec = generalized_dihedral_decomposition(G)
    if dec is not None:
        G0, v = dec
        S = tuple(build_s_alpha(E, G0, v, a) for a in klein_automorphisms(E, v))
        fam["S"] = NamedFamily("S", S, f"s_alpha over Aut(K), v = {G.name(v)}")
    return fam


def set_product(X, Y) -> set:
    return {compose(x, y) for x in X for y in Y}


def _witness(items, limit=1):
    return [list(i) if isinstance(i, tuple) else i for i in list(items)[:limit]]


# -- verifiers ---------------------------------------------------------------

def verify_prop1(E: CheinEmbedding, aut_G: Optional[list] = None) -> StructureVerdict:
    G, L, n = E.group, E.loop, E.n
    if aut_G is None:
        aut_G = automorphism_group(G)
    fam = families(E, aut_G)
    A, D = fam["A"].members, fam["D"].members
    ident = identity_map(2 * n)
    V = StructureVerdict()

    bad = [f for f in (*A, *D) if kind_of(L, f) is not Kind.AUTOMORPHISM]
    V.add("prop1.a.automorphisms", not bad, count=len(bad))
    V.add("prop1.a.subgroups", set(generate(A, 2 * n)) == set(A) and set(generate(D, 2 * n)) == set(D))
    V.add("prop1.a.intersection", set(A) & set(D) == {ident}, size=len(set(A) & set(D)))

    phis = [p.images for p in aut_G]
    a_of = dict(zip(phis, A))
    bad = [(p, q) for p in phis for q in phis if compose(a_of[p], a_of[q]) != a_of[compose(p, q)]]
    V.add("prop1.b.a_composition", not bad, violations=len(bad))
    bad = [(t, s) for t in range(n) for s in range(n)
           if compose(D[t], D[s]) != D[G.mul(t, s)]]
    V.add("prop1.b.d_composition", not bad, violations=len(bad))
    bad = [p for p in phis if inverse(a_of[p]) != a_of[inverse(p)]]
    bad += [t for t in range(n) if inverse(D[t]) != D[G.inv(t)]]
    V.add("prop1.b.inverses", not bad, violations=len(bad))
    bad = [(p, t) for p in phis for t in range(n)
           if compose(a_of[p], D[t]) != compose(D[p[t]], a_of[p])]
    V.add("prop1.b.commutation", not bad, violations=len(bad))

    AD = set_product(A, D)
    expected = len(aut_G) * n
    V.add("prop1.c.holomorph", len(A) == len(aut_G) and len(D) == n and len(AD) == expected
          and set(generate(sorted(AD), 2 * n)) == AD,
          AD=len(AD), aut_G=len(aut_G), G=n, level="numeric")
    return V


def verify_theorem1(E: CheinEmbedding, aut_L: HalfGroup, aut_G: Optional[list] = None) -> StructureVerdict:
    G, n = E.group, E.n
    if aut_G is None:
        aut_G = automorphism_group(G)
    fam = families(E, aut_G)
    AD = set_product(fam["A"], fam["D"])
    auts = set(aut_L.elements)
    hol = len(aut_G) * n
    V = StructureVerdict()
    dec = generalized_dihedral_decomposition(G)
    if dec is None:
        V.add("theorem1.hol", len(auts) == hol and auts == AD, aut_L=len(auts), hol=hol)
        return V
    G0, v = dec
    S = fam["S"].members
    bad = [f for f in S if kind_of(E.loop, f) is not Kind.AUTOMORPHISM]
    V.add("theorem1.s_alpha_automorphisms", not bad, count=len(S))
    exp2, _ = is_elementary_abelian_2(G0)
    if exp2:
        V.skip("theorem1.ads", "G0 has exponent 2, outside the theorem's hypothesis")
        return V
    ADS = set_product(AD, S)
    meet = AD & set(S)
    d_v = build_d_t(E, v)
    V.add("theorem1.ads", auts == ADS, aut_L=len(auts), ADS=len(ADS))
    V.add("theorem1.ad_meet_s", meet == {identity_map(2 * n), d_v}, size=len(meet))
    V.add("theorem1.order", len(auts) == 3 * hol, aut_L=len(auts), three_hol=3 * hol)
    return V


def verify_trivial_half(L: FiniteLoop, half: HalfGroup, aut_L: HalfGroup) -> StructureVerdict:
    V = StructureVerdict()
    auts = set(aut_L.elements)
    trivial = set(half.trivial)
    if L.is_commutative:
        V.add("remark.abelian_half_is_aut", set(half.elements) == trivial == auts,
              half=len(half), aut=len(auts))
        return V
    aaip = has_aaip(L)
    V.add("prop8.aaip", aaip.holds, witness=aaip.witness)
    J = inversion_mapping(L)
    V.add("prop8.inversion_anti", kind_of(L, J) is Kind.ANTI_AUTOMORPHISM)
    JA = auts | {compose(J, a) for a in auts}
    V.add("prop8.half_t_equals_J_aut", trivial == JA, half_t=len(trivial), J_aut=len(JA))
    V.add("prop8.order", len(trivial) == 2 * len(auts), half_t=len(trivial), aut=len(auts))
    bad = [f for f in trivial if compose(J, f) != compose(f, J)]
    V.add("prop8.inversion_central", not bad, violations=len(bad))
    return V


def decomposition_oracle(L: FiniteLoop, aut_L: HalfGroup, H: HalfGroup) -> list:
    """Closure of {J} ∪ Aut(L) ∪ H, sorted."""
    return generate([inversion_mapping(L), *aut_L.elements, *H.elements], L.order)


def _theorem1_base(E: CheinEmbedding, fam: dict):
    """Generators of Aut(L): A and D, plus S in the generalized dihedral case; None when G0 has exponent 2."""
    dec = generalized_dihedral_decomposition(E.group)
    if dec is None:
        return [*fam["A"], *fam["D"]], "AD"
    if is_elementary_abelian_2(dec[0])[0]:
        return None, None
    return [*fam["A"], *fam["D"], *fam["S"]], "ADS"


def verify_decomposition(
    E: CheinEmbedding,
    half: HalfGroup,
    aut_L: HalfGroup,
    H: HalfGroup,
    aut_G: Optional[list] = None,
) -> StructureVerdict:
    G, L, n = E.group, E.loop, E.n
    if aut_G is None:
        aut_G = automorphism_group(G)
    fam = families(E, aut_G)
    ident = identity_map(2 * n)
    V = StructureVerdict()
    full = set(half.elements)

    product = set_product(half.trivial, H.elements)
    V.add("prop3.half_t_times_h", product == full, product=len(product), half=len(full))
    oracle = decomposition_oracle(L, aut_L, H)
    V.add("prop3.oracle_equivalence", oracle == list(half.elements), oracle=len(oracle), half=len(full))

    AD = set_product(fam["A"], fam["D"])
    V.add("decomposition.h_meet_ad", set(H.elements) & AD == {ident})

    if G.is_abelian:
        reason = "G is abelian, so M(G, 2) is a group"
        for claim in ("eq2.inversion_central", "eq2.inversion_outside_adh", "eq2.adh_order", "lemma1.conjugation"):
            V.skip(claim, reason)
        return V

    base, label = _theorem1_base(E, fam)
    J = inversion_mapping(L)
    bad = [f for f in half if compose(J, f) != compose(f, J)]
    V.add("eq2.inversion_central", not bad, violations=len(bad))
    if base is None:
        V.skip("eq2.inversion_outside_adh", "generalized dihedral with G0 of exponent 2")
        V.skip("eq2.adh_order", "generalized dihedral with G0 of exponent 2")
    else:
        ADH = generate([*base, *H.elements], 2 * n)
        key = label + "H"
        V.add("eq2.inversion_outside_adh", J not in set(ADH), subgroup=key)
        V.add("eq2.adh_order", 2 * len(ADH) == len(full), subgroup=key,
              order=len(ADH), half=len(full))

    hs = set(H.elements)
    bad = []
    for phi in H:
        gam = set(gamma(E, phi).members)
        for a in fam["A"]:
            if compose(inverse(a), compose(phi, a)) not in hs:
                bad.append(("a", a, phi))
        for t in range(n):
            d = fam["D"].members[t]
            conj = compose(d, compose(phi, d)) if t in gam else compose(inverse(d), compose(phi, d))
            if conj not in hs:
                bad.append(("d", t, phi))
    V.add("lemma1.conjugation", not bad, violations=len(bad))
    return V


def quotient_group(big: list, normal: list) -> FiniteGroup:
    """Coset table of big/normal, cosets ordered by least member."""
    key = {}
    for f in big:
        key[f] = min(compose(f, z) for z in normal)
    reps = sorted(set(key.values()))
    index = {r: i for i, r in enumerate(reps)}
    table = [[index[key[compose(a, b)]] for b in reps] for a in reps]
    return validate_group(table, [f"c{i}" for i in range(len(reps))])


def verify_prop10_11_thm3(
    E: CheinEmbedding,
    half: HalfGroup,
    H: HalfGroup,
    aut_G: Optional[list] = None,
) -> StructureVerdict:
    G, L, n = E.group, E.loop, E.n
    if aut_G is None:
        aut_G = automorphism_group(G)
    fam = families(E, aut_G)
    Z = center(G)
    inn = inner_automorphism_group(G)
    r = int(math.log2(len(H)))
    V = StructureVerdict()

    if G.is_abelian or len(H) == 1:
        reason = "H is trivial" if len(H) == 1 else "G is abelian"
        for claim in ("prop10", "prop11.a", "prop11.b", "prop11.c", "theorem3.order"):
            V.skip(claim, reason)
        if len(H) == 1 and generalized_dihedral_decomposition(G) is None and not L.is_commutative:
            expected = 2 * len(aut_G) * n
            V.add("theorem3.r0_specialization", len(half) == expected, half=len(half), expected=expected)
        return V

    exp2, m = is_elementary_abelian_2(Z)
    V.add("theorem_prop7.center_elementary", exp2, center=len(Z), m=m)
    m = m or 0
    D, Zf = fam["D"].members, fam["Z"].members
    DH = generate([*D, *H.elements], 2 * n)
    ZH = generate([*Zf, *H.elements], 2 * n)
    zh = set(ZH)

    bad = [(z, f) for z in Zf for f in DH if compose(z, f) != compose(f, z)]
    V.add("prop10", not bad, violations=len(bad))

    ident = identity_map(2 * n)
    elem = all(compose(f, f) == ident for f in ZH) and all(
        compose(f, g) == compose(g, f) for f in ZH for g in ZH
    )
    nn = m + r
    V.add("prop11.a", elem and len(ZH) == 2 ** nn, order=len(ZH), m=m, r=r, n=nn)

    bad = [(d, z) for d in [*D, *H.elements] for z in ZH
           if compose(d, compose(z, inverse(d))) not in zh]
    V.add("prop11.b", not bad, violations=len(bad))

    detail = {"DH": len(DH), "ZH": len(ZH), "inner": len(inn)}
    ok = len(DH) == len(ZH) * len(inn) and len(DH) == n * len(H)
    if len(inn) <= ORDER_BOUND:
        Q = quotient_group(DH, ZH)
        I = closure_from_permutations([g.images for g in inn])
        ok = ok and isomorphic(Q, I) is not None
        detail["level"] = "constructive"
    else:
        detail["level"] = "numeric"
    V.add("prop11.c", ok, **detail)

    lhs = 2 * len(aut_G) * n * len(H)
    rhs = 2 ** (nn + 1) * len(aut_G) * len(inn)
    V.add("theorem3.order", len(half) == lhs == rhs, half=len(half), via_G=lhs, via_inner=rhs)
    return V


def verify_properties(E: CheinEmbedding, half: HalfGroup, aut_L: HalfGroup, H: HalfGroup) -> StructureVerdict:
    """Property suites for the half-automorphism group and for H, as claims."""
    V = StructureVerdict()
    for prefix, viol in (
        ("half", half_group_violations(E.loop, half, aut_L)),
        ("h", h_violations(E, H)),
    ):
        for key, items in viol.items():
            if items is None:
                V.skip(f"{prefix}.{key}", "G is abelian")
                continue
            V.add(f"{prefix}.{key}", not items, violations=len(items), first=_witness(items))
    return V
