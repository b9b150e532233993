"""Decision procedure for the absence of k-rational points on Shimura curves.

Given B, an abelian field k and a prime q, :func:`theorem_check` tests every
hypothesis of the emptiness criterion and either emits a :class:`Certificate`
or lists each failed hypothesis. Local solvability is never computed; it is
looked up in a registry of cited facts and lifted to overfields.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .abfield import (
    AbelianField,
    decompose,
    has_real_place,
    is_subfield,
    quadratic_field,
)
from .arith import ArithmeticOverflow, is_prime
from .fieldspec import canonical, parse_field_spec
from .quaternion import (
    ClassBEvidence,
    QuaternionAlgebra,
    from_discriminant,
    in_class_b,
    splits_over,
)
from .tracesets import d_set, divides_some, prime_support


class UndefinedSBranch(ValueError):
    """B splits over k but e_q is odd: the set S(k, q) is not defined there."""


@dataclass(frozen=True)
class SMembership:
    q: int
    split_case: bool
    exponent: int
    Nq: int
    p_set: tuple[int, ...] | None
    in_S: bool
    escaping_primes: tuple[int, ...]


def s_membership(B: QuaternionAlgebra, k: AbelianField, q: int,
                 full: bool = True) -> SMembership:
    """Whether every prime of d(B) lies in P(D(N_q, exponent)) | {q}.

    With ``full=False`` the prime support is not materialized; escaping primes
    are found by a residue-class divisibility test instead.
    """
    dec = decompose(k, q)
    split = splits_over(B, k).splits
    if split:
        if dec.e % 2:
            raise UndefinedSBranch(
                f"B splits over k and e_q = {dec.e} is odd at q = {q}"
            )
        exponent = dec.e
    else:
        exponent = 2 * dec.e
    Nq = q**dec.f
    if full:
        p_set = tuple(sorted(set(prime_support(d_set(Nq, exponent))) | {q}))
        escaping = tuple(p for p in B.ramified_primes if p not in p_set)
    else:
        p_set = None
        escaping = tuple(
            p for p in B.ramified_primes
            if p != q and not divides_some(p, Nq, exponent)
        )
    return SMembership(q, split, exponent, Nq, p_set, not escaping, escaping)


# Inconclusive reason codes, one per hypothesis.
DEGREE_ODD = "degree_odd"
PRIME_NOT_UNIQUE = "prime_not_unique"
RESIDUE_DEGREE_EVEN = "residue_degree_even"
NOT_IN_CLASS_B = "not_in_class_B"
IN_S = "in_S"
S_UNDEFINED = "S_undefined"
S_OVERFLOW = "S_overflow"


@dataclass(frozen=True)
class Reason:
    q: int | None
    code: str
    detail: str


@dataclass(frozen=True)
class Certificate:
    disc: int
    field_spec: str | None
    modulus: int
    subgroup: tuple[int, ...]
    degree: int
    q: int
    e: int
    f: int
    g: int
    Nq: int
    exponent: int
    split_over_k: bool
    class_b: tuple[tuple[int, int | None], ...]
    p_set: tuple[int, ...]
    witness_p: int
    verdict: str = "Proven"
    citations: tuple[str, ...] = ()
    version: str = __version__

    def to_json(self) -> dict[str, Any]:
        return {
            "disc": self.disc,
            "field": {
                "spec": self.field_spec,
                "modulus": self.modulus,
                "subgroup": list(self.subgroup),
                "degree": self.degree,
            },
            "q": self.q,
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "Nq": self.Nq,
            "exponent": self.exponent,
            "split_over_k": self.split_over_k,
            "classB": {
                "q_fields": [{"t": t, "witness_p": w} for t, w in self.class_b]
            },
            "p_set": list(self.p_set),
            "witness_p": self.witness_p,
            "verdict": self.verdict,
            "citations": list(self.citations),
            "version": self.version,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Certificate":
        fld = data["field"]
        return cls(
            disc=data["disc"],
            field_spec=fld["spec"],
            modulus=fld["modulus"],
            subgroup=tuple(fld["subgroup"]),
            degree=fld["degree"],
            q=data["q"],
            e=data["e"],
            f=data["f"],
            g=data["g"],
            Nq=data["Nq"],
            exponent=data["exponent"],
            split_over_k=data["split_over_k"],
            class_b=tuple((x["t"], x["witness_p"]) for x in data["classB"]["q_fields"]),
            p_set=tuple(data["p_set"]),
            witness_p=data["witness_p"],
            verdict=data["verdict"],
            citations=tuple(data["citations"]),
            version=data["version"],
        )


@dataclass(frozen=True)
class Proven:
    certificate: Certificate
    kind: str = "Proven"


@dataclass(frozen=True)
class ProvenRealPlace:
    modulus: int
    evidence: str
    kind: str = "ProvenRealPlace"


@dataclass(frozen=True)
class Inconclusive:
    reasons: tuple[Reason, ...]
    kind: str = "Inconclusive"


Verdict = Proven | ProvenRealPlace | Inconclusive


def verdict_to_json(v: Verdict) -> dict[str, Any]:
    if isinstance(v, Proven):
        return {"kind": v.kind, "certificate": v.certificate.to_json()}
    if isinstance(v, ProvenRealPlace):
        return {"kind": v.kind, "modulus": v.modulus, "evidence": v.evidence}
    return {"kind": v.kind, "reasons": [asdict(r) for r in v.reasons]}


def verdict_from_json(data: dict[str, Any]) -> Verdict:
    kind = data["kind"]
    if kind == "Proven":
        return Proven(Certificate.from_json(data["certificate"]))
    if kind == "ProvenRealPlace":
        return ProvenRealPlace(data["modulus"], data["evidence"])
    if kind == "Inconclusive":
        return Inconclusive(tuple(Reason(**r) for r in data["reasons"]))
    raise ValueError(f"unknown verdict kind {kind!r}")


@dataclass(frozen=True)
class LocalRegistryEntry:
    disc: int
    base_field: AbelianField
    base_spec: str
    citation: str

    def __post_init__(self):
        if not self.citation:
            raise ValueError("registry entries need a citation")


def default_registry() -> tuple[LocalRegistryEntry, ...]:
    return (
        LocalRegistryEntry(39, quadratic_field(-13), "Q(sqrt(-13))",
                           "Jordan, Points on Shimura curves rational over number fields, p.94 (cf. Jordan-Livne)"),
        LocalRegistryEntry(62, quadratic_field(-39), "Q(sqrt(-39))",
                           "Rotger-de Vera-Piquero, Galois representations over fields of moduli and rational points on Shimura curves, Table 1"),
        LocalRegistryEntry(86, quadratic_field(-15), "Q(sqrt(-15))",
                           "Rotger-de Vera-Piquero, Galois representations over fields of moduli and rational points on Shimura curves, Table 1"),
    )


@dataclass(frozen=True)
class LocalSolvability:
    status: str  # "SolvableEverywhere" or "Unknown"
    citation: str | None = None
    base_spec: str | None = None


def local_solvability(B: QuaternionAlgebra, k: AbelianField,
                      registry: tuple[LocalRegistryEntry, ...] | None = None) -> LocalSolvability:
    """Local points everywhere, lifted from a cited subfield of k."""
    if registry is None:
        registry = default_registry()
    for entry in registry:
        if entry.disc == B.discriminant and is_subfield(entry.base_field, k):
            return LocalSolvability("SolvableEverywhere", entry.citation, entry.base_spec)
    return LocalSolvability("Unknown")


def theorem_check(B: QuaternionAlgebra, k: AbelianField, q: int,
                  spec: str | None = None) -> Verdict:
    if q < 2 or not is_prime(q):
        raise ValueError(f"{q} is not prime")
    reasons: list[Reason] = []
    n = k.degree
    dec = decompose(k, q)
    if n % 2:
        reasons.append(Reason(q, DEGREE_ODD, f"[k:Q] = {n} is odd"))
    if dec.g != 1:
        reasons.append(Reason(q, PRIME_NOT_UNIQUE, f"g_q = {dec.g}: {dec.g} primes of k above {q}"))
    if dec.f % 2 == 0:
        reasons.append(Reason(q, RESIDUE_DEGREE_EVEN, f"f_q = {dec.f} is even"))
    class_b = in_class_b(B, q)
    if not class_b.member:
        missing = [t for t, w in class_b.witnesses if w is None]
        reasons.append(Reason(q, NOT_IN_CLASS_B,
                              "B splits over " + ", ".join(f"Q(sqrt(-{t}))" for t in missing)))
    s_data = None
    try:
        s_data = s_membership(B, k, q, full=False)
    except UndefinedSBranch as exc:
        reasons.append(Reason(q, S_UNDEFINED, str(exc)))
    except ArithmeticOverflow as exc:
        reasons.append(Reason(q, S_OVERFLOW, f"D(N_q, exponent) leaves the 128-bit range: {exc}"))
    if s_data is not None and s_data.in_S:
        reasons.append(Reason(
            q, IN_S,
            f"every prime of d(B) divides an element of D({s_data.Nq},{s_data.exponent}) or equals q",
        ))
    if reasons:
        return Inconclusive(tuple(reasons))

    full = s_membership(B, k, q)
    if full.escaping_primes != s_data.escaping_primes:
        raise ArithmeticError(f"prime-support routes disagree at q = {q}")
    s_data = full
    # even degree, g = 1 and f odd force e even
    assert dec.e % 2 == 0 and dec.e * dec.f == n
    local = local_solvability(B, k)
    cert = Certificate(
        disc=B.discriminant,
        field_spec=spec,
        modulus=k.modulus,
        subgroup=k.subgroup,
        degree=n,
        q=q,
        e=dec.e,
        f=dec.f,
        g=dec.g,
        Nq=s_data.Nq,
        exponent=s_data.exponent,
        split_over_k=s_data.split_case,
        class_b=class_b.witnesses,
        p_set=s_data.p_set,
        witness_p=s_data.escaping_primes[0],
        citations=(local.citation,) if local.citation else (),
    )
    return Proven(cert)


def _primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def emptiness_scan(B: QuaternionAlgebra, k: AbelianField, q_max: int = 100,
                   spec: str | None = None) -> Verdict:
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    if has_real_place(k):
        return ProvenRealPlace(k.modulus, f"-1 mod {k.modulus} lies in H: k has a real place")
    reasons: list[Reason] = []
    for q in _primes_up_to(q_max):
        verdict = theorem_check(B, k, q, spec)
        if isinstance(verdict, Proven):
            return verdict
        reasons.extend(verdict.reasons)
    return Inconclusive(tuple(reasons))


def validate_certificate(cert: Certificate | dict[str, Any]) -> bool:
    """Recompute a certificate from (disc, field, q) and compare it exactly."""
    try:
        data = cert.to_json() if isinstance(cert, Certificate) else cert
        c = Certificate.from_json(data)
        B = from_discriminant(c.disc)
        k = AbelianField(c.modulus, c.subgroup)
        if k.subgroup != c.subgroup:
            return False
        if c.field_spec is not None:
            if canonical(c.field_spec) != c.field_spec:
                return False
            if parse_field_spec(c.field_spec) != k:
                return False
        verdict = theorem_check(B, k, c.q, c.field_spec)
    except (ValueError, KeyError, TypeError, ArithmeticError):
        return False
    if not isinstance(verdict, Proven):
        return False
    # compare serialized text so that e.g. True and 1 are told apart
    return _dump(verdict.certificate.to_json()) == _dump(data)


def _dump(data: dict[str, Any]) -> str:
    return json.dumps(data, sort_keys=True)


COUNTEREXAMPLE_LABEL = (
    "Hasse-principle counterexample "
    "(global emptiness machine-verified; local solvability by citation)"
)


@dataclass(frozen=True)
class HasseReport:
    disc: int
    field_spec: str | None
    verdict: Verdict
    local: LocalSolvability
    counterexample: bool
    label: str | None = field(default=None)

    def to_json(self) -> dict[str, Any]:
        return {
            "disc": self.disc,
            "field_spec": self.field_spec,
            "verdict": verdict_to_json(self.verdict),
            "local": asdict(self.local),
            "counterexample": self.counterexample,
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "HasseReport":
        return cls(
            data["disc"],
            data["field_spec"],
            verdict_from_json(data["verdict"]),
            LocalSolvability(**data["local"]),
            data["counterexample"],
            data["label"],
        )


def hasse_report(B: QuaternionAlgebra, k: AbelianField, q_max: int = 100,
                 registry: tuple[LocalRegistryEntry, ...] | None = None,
                 spec: str | None = None) -> HasseReport:
    verdict = emptiness_scan(B, k, q_max, spec)
    local = local_solvability(B, k, registry)
    empty = not isinstance(verdict, Inconclusive)
    hit = empty and local.status == "SolvableEverywhere"
    return HasseReport(B.discriminant, spec, verdict, local, hit,
                       COUNTEREXAMPLE_LABEL if hit else None)


__all__ = [
    "ClassBEvidence",
    "Certificate",
    "HasseReport",
    "Inconclusive",
    "LocalRegistryEntry",
    "LocalSolvability",
    "Proven",
    "ProvenRealPlace",
    "Reason",
    "SMembership",
    "UndefinedSBranch",
    "default_registry",
    "emptiness_scan",
    "hasse_report",
    "local_solvability",
    "s_membership",
    "theorem_check",
    "validate_certificate",
]
