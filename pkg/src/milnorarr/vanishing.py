"""Certificates for the non-unipotent eigenspaces of H^1 of the Milnor fiber.

Every test here is arithmetic on the order n of an eigenvalue: lambda^m = 1
iff n | m.  An eigenvalue gets one of three verdicts:

* ``CertifiedZero``, backed by a replayable certificate: either an
  ``edge_order`` certificate (each codim-2 edge i with lambda^{m_i} = 1 meets
  a codim-3 edge j with lambda^{m_j} != 1) or a ``local_vanishing``
  certificate (each such i meets a j whose local H^1_lambda vanishes
  according to the local oracle);
* ``UpperBound`` with the number rho of good connected components;
* ``Unknown``.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence, Union

from .arrangement import Arrangement, Edge, Lattice, compute_lattice
from .arrangement.lattice import e_gcd
from .arrangement.local import LocalType, local_type
from .exactmath import Eigenvalue

# -- eigenvalues and per-edge ranks ------------------------------------------


def candidate_eigenvalues(arr: Union[Arrangement, int]) -> list[Eigenvalue]:
    """exp(2 pi i k/d) for 1 <= k < d; any other lambda has lambda^d != 1."""
    d = arr if isinstance(arr, int) else arr.degree
    if d < 1:
        raise ValueError("degree must be positive")
    return [Eigenvalue(k, d) for k in range(1, d)]


def unipotent_dim(arr: Union[Arrangement, int]) -> int:
    return (arr if isinstance(arr, int) else arr.degree) - 1


def _mult(edge: Union[Edge, int]) -> int:
    return edge if isinstance(edge, int) else edge.multiplicity


def local_system_rank(edge: Union[Edge, int], lam: Eigenvalue) -> int:
    """Rank of the lambda-part of the vanishing cohomology sheaf along a codim-2 edge."""
    m = _mult(edge)
    if not lam.kills(m):
        return 0
    return m - 2 + (1 if lam.is_one() else 0)


def global_sections_dim(lattice: Lattice, i: int, lam: Eigenvalue) -> int:
    """Same as the rank, but the condition is lambda^{e_i} = 1."""
    m = lattice.edges2[i].multiplicity
    if not lam.kills(e_gcd(lattice, i)):
        return 0
    return m - 2 + (1 if lam.is_one() else 0)


@dataclass(frozen=True)
class LambdaEdgeSets:
    I2: tuple[int, ...]
    I3: tuple[int, ...]
    I3_of: dict

    def points_of(self, i: int) -> tuple[int, ...]:
        return self.I3_of.get(i, ())


def lambda_edge_sets(lattice: Lattice, lam: Eigenvalue) -> LambdaEdgeSets:
    I2 = tuple(i for i, e in enumerate(lattice.edges2) if lam.kills(e.multiplicity))
    I3 = tuple(j for j, e in enumerate(lattice.edges3) if lam.kills(e.multiplicity))
    return LambdaEdgeSets(I2, I3, {i: lattice.incident_points(i) for i in I2})


# -- certificates ------------------------------------------------------------

EDGE_ORDER = "edge_order"
LOCAL_VANISHING = "local_vanishing"
ORDER_EXCLUDED = "order_excluded"


@dataclass(frozen=True)
class Witness:
    """Codim-3 edge j incident to codim-2 edge i, with the rule that kills lambda there."""

    i: int
    j: int
    rule: str
    m_i: int
    m_j: int
    citation: str = ""
    conditional: bool = False

    def to_json(self) -> dict:
        out = {"i": self.i, "j": self.j, "rule": self.rule, "m_i": self.m_i, "m_j": self.m_j}
        if self.citation:
            out["citation"] = self.citation
        if self.conditional:
            out["conditional"] = True
        return out


@dataclass(frozen=True)
class Certificate:
    kind: str
    order: int
    witnesses: tuple[Witness, ...] = ()
    assumptions: tuple[str, ...] = ()

    @property
    def conditional(self) -> bool:
        return any(w.conditional for w in self.witnesses)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "conditional": self.conditional,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


class CriterionMismatch(RuntimeError):
    """The incidence form and the gcd form of the edge-order test disagree."""


def gcd_criterion(lattice: Lattice, lam: Eigenvalue) -> bool:
    """True iff lambda^{e_i} != 1 for every i with lambda^{m_i} = 1."""
    sets = lambda_edge_sets(lattice, lam)
    return all(not lam.kills(e_gcd(lattice, i)) for i in sets.I2)


def certify_by_orders(lattice: Lattice, lam: Eigenvalue) -> Optional[Certificate]:
    """Edge-order certificate: each i in I2_lambda meets some j with lambda^{m_j} != 1."""
    if not lam.kills(lattice.arrangement.degree):
        return Certificate(ORDER_EXCLUDED, lam.order)
    sets = lambda_edge_sets(lattice, lam)
    E2, E3 = lattice.edges2, lattice.edges3
    witnesses = []
    ok = True
    for i in sets.I2:
        j = next((j for j in sets.points_of(i) if not lam.kills(E3[j].multiplicity)), None)
        if j is None:
            ok = False
            break
        witnesses.append(Witness(i, j, "order", E2[i].multiplicity, E3[j].multiplicity))
    if sets.I2 and ok != gcd_criterion(lattice, lam):
        raise CriterionMismatch(f"edge-order and gcd tests disagree at order {lam.order}")
    if not ok:
        return None
    return Certificate(EDGE_ORDER, lam.order, tuple(witnesses))


# -- local oracle ------------------------------------------------------------

ZERO, NONZERO, UNKNOWN = "zero", "nonzero", "unknown"
VERIFIED_GMM3_LIMIT = 6

GMM3_CITATION = (
    "H^1 table for the G(m,m,3) plane arrangements: dim 2 at order 3 if 3 | m, "
    "dim 1 at order 3 otherwise, zero for lambda not a cube root of unity"
)
THRESHOLD_CITATION = (
    "expected degree threshold: plane arrangements of degree < D have H^1_lambda = 0 "
    "for lambda outside mu_3 and mu_4 (the Hessian arrangement, degree 12, is nonzero for mu_4)"
)


@dataclass(frozen=True)
class TableEntry:
    """User-supplied local result, matched on degree, profile and optional label."""

    degree: int
    order: int
    status: str
    citation: str
    profile: Optional[tuple[int, ...]] = None
    label: Optional[str] = None
    dim: int = 0

    def __post_init__(self):
        if self.status not in (ZERO, NONZERO):
            raise ValueError(f"table status must be 'zero' or 'nonzero', got {self.status!r}")
        if self.status == NONZERO and self.dim < 1:
            raise ValueError("a nonzero table entry needs dim >= 1")
        if self.degree < 1 or self.order < 1:
            raise ValueError("table degree and order must be positive")
        if not self.citation:
            raise ValueError("table entries need a citation")

    def matches(self, lt: LocalType, lam: Eigenvalue) -> bool:
        if lt.degree != self.degree or lam.order != self.order:
            return False
        if self.profile is not None and lt.profile != self.profile:
            return False
        return self.label is None or self.label == lt.label

    @classmethod
    def from_json(cls, data: Any) -> "TableEntry":
        if not isinstance(data, dict):
            raise ValueError("table entry must be an object")
        fp = data.get("fingerprint", data)
        try:
            prof = fp.get("profile")
            return cls(
                degree=int(fp["degree"]),
                order=int(data["order"]),
                status=str(data["status"]),
                citation=str(data.get("citation", "")),
                profile=tuple(int(x) for x in prof) if prof is not None else None,
                label=fp.get("label"),
                dim=int(data.get("dim", 0)),
            )
        except KeyError as exc:
            raise ValueError(f"table entry missing field {exc}") from None


@dataclass(frozen=True)
class OracleConfig:
    threshold_D: int = 6
    assume: bool = False
    user_table: tuple[TableEntry, ...] = ()

    def __post_init__(self):
        if self.threshold_D < 1:
            raise ValueError("threshold D must be >= 1")


@dataclass(frozen=True)
class LocalVerdict:
    status: str
    rule: Optional[str] = None
    dim: Optional[int] = None
    citation: str = ""
    conditional: bool = False

    @property
    def is_zero(self) -> bool:
        return self.status == ZERO


def rule_order(degree: int, lam: Eigenvalue) -> Optional[LocalVerdict]:
    if not lam.kills(degree):
        return LocalVerdict(ZERO, "order", 0, "lambda^{m_j} != 1")
    return None


def rule_gmm3_table(lt: LocalType, lam: Eigenvalue) -> Optional[LocalVerdict]:
    if not lt.label.startswith("G(") or lam.is_one():
        return None
    mp = lt.degree // 3
    cite = GMM3_CITATION
    if mp > VERIFIED_GMM3_LIMIT:
        cite += f"; m={mp} is beyond the machine-verified range m <= {VERIFIED_GMM3_LIMIT}"
    if lam.order == 3:
        return LocalVerdict(NONZERO, "gmm3_table", 2 if mp % 3 == 0 else 1, cite)
    return LocalVerdict(ZERO, "gmm3_table", 0, cite)


def rule_degree_threshold(degree: int, lam: Eigenvalue, D: int) -> Optional[LocalVerdict]:
    if lam.is_one() or 3 % lam.order == 0 or 4 % lam.order == 0:
        return None
    if degree < D:
        return LocalVerdict(ZERO, "degree_threshold", 0, f"{THRESHOLD_CITATION}; D={D}", True)
    return None


def rule_user_table(lt: LocalType, lam: Eigenvalue, table: Iterable[TableEntry]) -> Optional[LocalVerdict]:
    for entry in table:
        if entry.matches(lt, lam):
            dim = 0 if entry.status == ZERO else entry.dim
            return LocalVerdict(entry.status, "user_table", dim, entry.citation, True)
    return None


def local_vanishing_oracle(lt: LocalType, lam: Eigenvalue, config: OracleConfig = OracleConfig()) -> LocalVerdict:
    """First applicable rule among order, G(m,m,3) table, degree threshold, user table."""
    for v in (
        rule_order(lt.degree, lam),
        rule_gmm3_table(lt, lam),
        rule_degree_threshold(lt.degree, lam, config.threshold_D) if config.assume else None,
        rule_user_table(lt, lam, config.user_table) if config.assume else None,
    ):
        if v is not None:
            return v
    return LocalVerdict(UNKNOWN)


class LocalCache:
    """Lazily computed local types and verdicts for one lattice."""

    def __init__(self, lattice: Lattice, config: OracleConfig = OracleConfig()):
        self.lattice = lattice
        self.config = config
        self._types: dict[int, LocalType] = {}
        self._verdicts: dict[tuple[int, int], LocalVerdict] = {}

    def local_type(self, j: int) -> LocalType:
        lt = self._types.get(j)
        if lt is None:
            lt = self._types[j] = local_type(self.lattice, j)
        return lt

    def verdict(self, j: int, lam: Eigenvalue) -> LocalVerdict:
        key = (j, lam.order)
        v = self._verdicts.get(key)
        if v is None:
            v = rule_order(self.lattice.edges3[j].multiplicity, lam)
            if v is None:
                v = local_vanishing_oracle(self.local_type(j), lam, self.config)
            self._verdicts[key] = v
        return v


def certify_by_local_vanishing(
    lattice: Lattice,
    lam: Eigenvalue,
    config: OracleConfig = OracleConfig(),
    cache: Optional[LocalCache] = None,
) -> Optional[Certificate]:
    """Each i in I2_lambda needs one incident j with vanishing local H^1_lambda.

    Unconditional witnesses are chosen whenever one exists at a given i.
    """
    if not lam.kills(lattice.arrangement.degree):
        return Certificate(ORDER_EXCLUDED, lam.order)
    cache = cache or LocalCache(lattice, config)
    sets = lambda_edge_sets(lattice, lam)
    E2, E3 = lattice.edges2, lattice.edges3
    witnesses = []
    for i in sets.I2:
        best = None
        for j in sets.points_of(i):
            v = cache.verdict(j, lam)
            if v.is_zero and (best is None or (best[1].conditional and not v.conditional)):
                best = (j, v)
                if not v.conditional:
                    break
        if best is None:
            return None
        j, v = best
        witnesses.append(
            Witness(i, j, v.rule, E2[i].multiplicity, E3[j].multiplicity, v.citation, v.conditional)
        )
    assumptions = tuple(sorted({w.citation for w in witnesses if w.conditional}))
    return Certificate(LOCAL_VANISHING, lam.order, tuple(witnesses), assumptions)


# -- rho bound ---------------------------------------------------------------

SYMMETRY_CITATION = (
    "strong connectivity at braid-type points: the local arrangement "
    "xyz(x-y)(y-z)(x-z) equals (u^2-v^2)(v^2-w^2)(u^2-w^2) after x=u+v, y=u+w, z=v+w, "
    "and the (mu_2)^3 sign action shows a generator restricts nonzero to every triple line"
)


@dataclass(frozen=True)
class WitnessRule:
    """Declares two codim-2 edges strongly connected at a codim-3 edge.

    A pair (i, i') meeting at j is connected when both edges and j match the
    rule and the oracle gives dim exactly 1 at j.
    """

    order: int
    edge_multiplicity: int
    edge_support: Optional[int]
    point_multiplicity: int
    point_support: Optional[int]
    point_profile: Optional[tuple[int, ...]]
    family: Optional[str]
    citation: str

    def matches_point(self, lattice: Lattice, j: int, lam: Eigenvalue) -> bool:
        p = lattice.edges3[j]
        if lam.order != self.order or p.multiplicity != self.point_multiplicity:
            return False
        if self.point_support is not None and p.support_size != self.point_support:
            return False
        if self.point_profile is not None and p.profile != self.point_profile:
            return False
        return self.family is None or lattice.arrangement.family == self.family

    def matches_edge(self, lattice: Lattice, i: int) -> bool:
        e = lattice.edges2[i]
        if e.multiplicity != self.edge_multiplicity:
            return False
        return self.edge_support is None or e.support_size == self.edge_support

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "edge_multiplicity": self.edge_multiplicity,
            "edge_support": self.edge_support,
            "point_multiplicity": self.point_multiplicity,
            "point_support": self.point_support,
            "point_profile": list(self.point_profile) if self.point_profile else None,
            "family": self.family,
            "citation": self.citation,
        }

    @classmethod
    def from_json(cls, data: Any) -> "WitnessRule":
        if not isinstance(data, dict):
            raise ValueError("witness rule must be an object")
        try:
            prof = data.get("point_profile")
            rule = cls(
                order=int(data["order"]),
                edge_multiplicity=int(data["edge_multiplicity"]),
                edge_support=_opt_int(data.get("edge_support")),
                point_multiplicity=int(data["point_multiplicity"]),
                point_support=_opt_int(data.get("point_support")),
                point_profile=tuple(int(x) for x in prof) if prof else None,
                family=data.get("family"),
                citation=str(data["citation"]),
            )
        except KeyError as exc:
            raise ValueError(f"witness rule missing field {exc}") from None
        if not rule.citation:
            raise ValueError("witness rules need a citation")
        return rule


def _opt_int(x) -> Optional[int]:
    return None if x is None else int(x)


DEFAULT_WITNESSES: tuple[WitnessRule, ...] = (
    WitnessRule(3, 3, 3, 6, 4, (6,), "G(m,m,4)", SYMMETRY_CITATION),
)


@dataclass(frozen=True)
class RhoOutcome:
    rho: Optional[int]
    assumptions: tuple[str, ...] = ()
    components: tuple[tuple[int, ...], ...] = ()
    good: tuple[bool, ...] = ()
    reason: str = ""


class _DSU:
    def __init__(self, items):
        self.p = {x: x for x in items}

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[max(ra, rb)] = min(ra, rb)


def rho_bound(
    lattice: Lattice,
    lam: Eigenvalue,
    config: OracleConfig = OracleConfig(),
    witnesses: Sequence[WitnessRule] = DEFAULT_WITNESSES,
    cache: Optional[LocalCache] = None,
) -> RhoOutcome:
    """Number of good components of I'_lambda under declared strong connectivity."""
    cache = cache or LocalCache(lattice, config)
    sets = lambda_edge_sets(lattice, lam)
    I2 = set(sets.I2)
    primed = []
    for i in sets.I2:
        verdicts = [cache.verdict(j, lam) for j in sets.points_of(i)]
        if any(v.is_zero for v in verdicts):
            continue
        if any(v.status == UNKNOWN for v in verdicts):
            j = next(j for j, v in zip(sets.points_of(i), verdicts) if v.status == UNKNOWN)
            return RhoOutcome(None, reason=f"local oracle unknown at codim-3 edge {j} on edge {i}")
        primed.append(i)
    for i in primed:
        if local_system_rank(lattice.edges2[i], lam) != 1:
            return RhoOutcome(None, reason=f"local system rank on edge {i} is not 1")

    pset = set(primed)
    used: set[str] = set()
    links = []
    for j, lines in sorted(lattice.lines_of.items()):
        v = cache.verdict(j, lam)
        if v.status != NONZERO or v.dim != 1:
            continue
        rules = [r for r in witnesses if r.matches_point(lattice, j, lam)]
        if not rules:
            continue
        for rule in rules:
            ends = [i for i in lines if i in I2 and rule.matches_edge(lattice, i)]
            if len(ends) < 2:
                continue
            used.add(rule.citation)
            if v.citation:
                used.add(v.citation)
            links.append(ends)

    dsu = _DSU(primed)
    bad_roots = set()
    touching = set()
    for ends in links:
        inside = [i for i in ends if i in pset]
        for a in inside[1:]:
            dsu.union(inside[0], a)
        if inside and len(inside) < len(ends):
            touching.update(inside)
    for i in touching:
        bad_roots.add(dsu.find(i))
    groups: dict[int, list[int]] = {}
    for i in primed:
        groups.setdefault(dsu.find(i), []).append(i)
    comps = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
    good = tuple(dsu.find(c[0]) not in bad_roots for c in comps)
    for i in primed:
        for j in sets.points_of(i):
            c = cache.verdict(j, lam).citation
            if c:
                used.add(c)
    return RhoOutcome(sum(good), tuple(sorted(used)), comps, good)


# -- orchestration -----------------------------------------------------------

CERTIFIED_ZERO, UPPER_BOUND, UNKNOWN_VERDICT = "CertifiedZero", "UpperBound", "Unknown"


@dataclass(frozen=True)
class AnalysisConfig:
    oracle: OracleConfig = OracleConfig()
    witnesses: tuple[WitnessRule, ...] = DEFAULT_WITNESSES
    orders: Optional[tuple[int, ...]] = None
    jobs: int = 1


@dataclass(frozen=True)
class EigenEntry:
    lam: Eigenvalue
    verdict: str
    certificate: Optional[Certificate] = None
    rho: Optional[int] = None
    assumptions: tuple[str, ...] = ()
    reason: str = ""

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "k": self.lam.k,
            "d": self.lam.d,
            "order": self.lam.order,
            "verdict": self.verdict,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.rho is not None:
            out["rho"] = self.rho
        out["assumptions"] = list(self.assumptions)
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class VanishingReport:
    label: str
    degree: int
    unipotent_dim: int
    entries: tuple[EigenEntry, ...] = field(default_factory=tuple)

    def by_order(self) -> dict[int, list[EigenEntry]]:
        out: dict[int, list[EigenEntry]] = {}
        for e in self.entries:
            out.setdefault(e.lam.order, []).append(e)
        return out

    def has_unknown(self) -> bool:
        return any(e.verdict == UNKNOWN_VERDICT for e in self.entries)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "degree": self.degree,
            "unipotent_dim": self.unipotent_dim,
            "eigenvalues": [e.to_json() for e in self.entries],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def analyze_eigenvalue(
    lattice: Lattice, lam: Eigenvalue, config: AnalysisConfig = AnalysisConfig(),
    cache: Optional[LocalCache] = None,
) -> EigenEntry:
    """Edge-order test, then local vanishing, then the rho bound, else Unknown."""
    cache = cache or LocalCache(lattice, config.oracle)
    cert = certify_by_orders(lattice, lam)
    if cert is not None:
        return EigenEntry(lam, CERTIFIED_ZERO, cert)
    # unconditional rules first, so an assumption is only used when needed
    strict = OracleConfig(config.oracle.threshold_D, False, ())
    cert = certify_by_local_vanishing(lattice, lam, strict, LocalCache(lattice, strict) if config.oracle.assume else cache)
    if cert is None and config.oracle.assume:
        cert = certify_by_local_vanishing(lattice, lam, config.oracle, cache)
    if cert is not None:
        return EigenEntry(lam, CERTIFIED_ZERO, cert, assumptions=cert.assumptions)
    rho = rho_bound(lattice, lam, config.oracle, config.witnesses, cache)
    if rho.rho is not None:
        return EigenEntry(lam, UPPER_BOUND, rho=rho.rho, assumptions=rho.assumptions)
    return EigenEntry(lam, UNKNOWN_VERDICT, reason=rho.reason)


_SHARED: Optional[tuple[Lattice, AnalysisConfig]] = None


def _order_worker(n: int) -> EigenEntry:
    lattice, config = _SHARED
    return analyze_eigenvalue(lattice, Eigenvalue(1, n), config)


def _per_order(lattice: Lattice, orders: list[int], config: AnalysisConfig) -> dict[int, EigenEntry]:
    global _SHARED
    if config.jobs > 1 and len(orders) > 1 and "fork" in multiprocessing.get_all_start_methods():
        _SHARED = (lattice, config)
        try:
            with multiprocessing.get_context("fork").Pool(min(config.jobs, len(orders))) as pool:
                results = pool.map(_order_worker, orders)
        finally:
            _SHARED = None
        return dict(zip(orders, results))
    cache = LocalCache(lattice, config.oracle)
    return {n: analyze_eigenvalue(lattice, Eigenvalue(1, n), config, cache) for n in orders}


def analyze(
    arr_or_lattice: Union[Arrangement, Lattice], config: AnalysisConfig = AnalysisConfig()
) -> VanishingReport:
    """Verdict for every candidate eigenvalue, computed once per order.

    Verdicts depend on lambda only through its order, so the representative
    exp(2 pi i/n) is analysed and the result copied to its Galois conjugates.
    """
    lattice = arr_or_lattice if isinstance(arr_or_lattice, Lattice) else compute_lattice(arr_or_lattice)
    arr = lattice.arrangement
    lams = candidate_eigenvalues(arr)
    if config.orders is not None:
        wanted = set(config.orders)
        lams = [lam for lam in lams if lam.order in wanted]
    orders = sorted({lam.order for lam in lams})
    per = _per_order(lattice, orders, config)
    entries = []
    for lam in lams:
        e = per[lam.order]
        entries.append(EigenEntry(lam, e.verdict, e.certificate, e.rho, e.assumptions, e.reason))
    return VanishingReport(arr.label, arr.degree, unipotent_dim(arr), tuple(entries))


def replay_certificate(
    lattice: Lattice, cert: Certificate, config: OracleConfig = OracleConfig()
) -> bool:
    """Re-derive a certificate from raw edge data; True iff every step checks out."""
    lam = Eigenvalue(1, cert.order)
    if cert.kind == ORDER_EXCLUDED:
        return not lam.kills(lattice.arrangement.degree)
    sets = lambda_edge_sets(lattice, lam)
    by_i = {w.i: w for w in cert.witnesses}
    if set(by_i) != set(sets.I2) or len(by_i) != len(cert.witnesses):
        return False
    cache = LocalCache(lattice, config)
    for i in sets.I2:
        w = by_i[i]
        if w.j not in lattice.incident_points(i):
            return False
        if w.m_i != lattice.edges2[i].multiplicity or w.m_j != lattice.edges3[w.j].multiplicity:
            return False
        if cert.kind == EDGE_ORDER:
            if lam.kills(w.m_j):
                return False
        elif cert.kind == LOCAL_VANISHING:
            v = cache.verdict(w.j, lam)
            if not v.is_zero or v.rule != w.rule:
                return False
        else:
            return False
    return True


def load_witnesses(path) -> tuple[WitnessRule, ...]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("witness file must hold a JSON list")
    return tuple(WitnessRule.from_json(d) for d in data)


def load_oracle_table(path) -> tuple[TableEntry, ...]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("oracle table must hold a JSON list")
    return tuple(TableEntry.from_json(d) for d in data)
