"""Censuses, cross-checks, and experiment drivers behind the CLI.

Each runner returns a small report object that formats itself as a table and
serializes to the documented JSON shape. Censuses share witness-search state
across elements with the same descent set; an optional process pool shards
the element list for the larger groups.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coxeter import CoxeterError, CoxeterSystem, coxeter_system
from . import polyring, spherical, splitrule, typea, words


# -- census ---------------------------------------------------------------


@dataclass
class CensusEntry:
    element: str
    left_descents: tuple[int, ...]
    spherical: bool
    witness: str | None

    def to_json_dict(self) -> dict:
        return {
            "element": self.element,
            "J": list(self.left_descents),
            "spherical": self.spherical,
            "witness": self.witness,
        }


@dataclass
class CensusReport:
    cartan_type: str
    total: int
    entries: list[CensusEntry]
    elapsed: float

    @property
    def nonspherical(self) -> list[str]:
        return [e.element for e in self.entries if not e.spherical]

    @property
    def spherical_count(self) -> int:
        return self.total - len(self.nonspherical)

    def to_json_dict(self) -> dict:
        return {
            "cartan_type": self.cartan_type,
            "total": self.total,
            "spherical": self.spherical_count,
            "nonspherical": len(self.nonspherical),
            "elapsed_seconds": round(self.elapsed, 3),
            "entries": [e.to_json_dict() for e in self.entries],
        }

    def summary(self) -> str:
        lines = [
            f"type {self.cartan_type}: {self.total} elements, "
            f"{self.spherical_count} spherical, "
            f"{len(self.nonspherical)} not spherical "
            f"({self.elapsed:.2f}s)"
        ]
        for e in self.entries:
            if not e.spherical:
                lines.append(f"  {e.element}")
        return "\n".join(lines)


def _element_label(system: CoxeterSystem, w) -> str:
    if system.cartan_type.family == "A":
        return typea.format_permutation(typea.element_to_perm(system, w))
    return words.format_word(w.word())


def _census_entries(system: CoxeterSystem, elements) -> list[CensusEntry]:
    searchers: dict = {}
    out = []
    for w in elements:
        J = system.left_descents(w)
        searcher = searchers.get(J)
        if searcher is None:
            searcher = searchers[J] = spherical.WitnessSearcher(system, J)
        witness = searcher.search(w)
        out.append(
            CensusEntry(
                _element_label(system, w),
                tuple(sorted(J)),
                witness is not None,
                None if witness is None else words.format_word(witness),
            )
        )
    return out


def _census_shard(args) -> list[dict]:
    type_string, shard = args
    system = coxeter_system(type_string)
    elements = [words.evaluate(system, word) for word in shard]
    return [e.to_json_dict() for e in _census_entries(system, elements)]


def run_census(
    type_string: str,
    cap: int | None = None,
    jobs: int | None = None,
    progress=None,
) -> CensusReport:
    """Maximal-sphericality census of a whole group.

    `jobs` > 1 shards the element list (grouped by descent set so each worker
    keeps one searcher per set) over a process pool.
    """
    start = time.time()
    system = coxeter_system(type_string)
    elements = system.elements(cap)
    if jobs and jobs > 1:
        by_descents: dict = {}
        for w in elements:
            by_descents.setdefault(system.left_descents(w), []).append(w.word())
        shards = [(type_string, shard) for shard in by_descents.values()]
        entries = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for got in pool.map(_census_shard, shards):
                entries.extend(
                    CensusEntry(
                        d["element"], tuple(d["J"]), d["spherical"], d["witness"]
                    )
                    for d in got
                )
                if progress:
                    progress(len(entries), len(elements))
        order = {_element_label(system, w): i for i, w in enumerate(elements)}
        entries.sort(key=lambda e: order[e.element])
    else:
        entries = []
        searchers: dict = {}
        for i, w in enumerate(elements):
            J = system.left_descents(w)
            searcher = searchers.get(J)
            if searcher is None:
                searcher = searchers[J] = spherical.WitnessSearcher(system, J)
            witness = searcher.search(w)
            entries.append(
                CensusEntry(
                    _element_label(system, w),
                    tuple(sorted(J)),
                    witness is not None,
                    None if witness is None else words.format_word(witness),
                )
            )
            if progress and (i + 1) % 500 == 0:
                progress(i + 1, len(elements))
    return CensusReport(type_string, len(elements), entries, time.time() - start)


# -- single-element check ----------------------------------------------------


@dataclass
class CheckReport:
    cartan_type: str
    element: str
    left_descents: tuple[int, ...]
    subset: tuple[int, ...]
    spherical: bool
    witness: str | None
    staircase: bool | None  # type A only

    def to_json_dict(self) -> dict:
        return {
            "cartan_type": self.cartan_type,
            "element": self.element,
            "J": list(self.left_descents),
            "I": list(self.subset),
            "spherical": self.spherical,
            "witness": self.witness,
            "staircase_multiplicity_free": self.staircase,
        }

    def summary(self) -> str:
        lines = [
            f"type {self.cartan_type}, element {self.element}",
            f"J(w) = {set(self.left_descents) or '{}'}",
            f"I = {set(self.subset) or '{}'}",
            f"I-spherical: {self.spherical}",
        ]
        if self.witness:
            lines.append(f"witness: {self.witness}")
        if self.staircase is not None:
            lines.append(f"staircase key multiplicity-free: {self.staircase}")
        return "\n".join(lines)


def parse_element(system: CoxeterSystem, text: str):
    """One-line notation for type A; generator words everywhere."""
    text = text.strip()
    if system.cartan_type.family == "A" and "s" not in text.lower():
        line = typea.parse_permutation(text)
        return typea.perm_to_element(system, line)
    return words.evaluate(system, words.parse_word(text))


def run_check(
    type_string: str, element_text: str, subset, paranoid: bool = False
) -> CheckReport:
    system = coxeter_system(type_string)
    w = parse_element(system, element_text)
    I = frozenset(subset)
    cert = spherical.find_witness(system, w, I)
    stair = None
    if system.cartan_type.family == "A":
        line = typea.element_to_perm(system, w)
        stair = polyring.staircase_test(line, I)
    if paranoid and cert is not None:
        if not spherical.verify_witness(system, w, I, cert.word):
            raise CoxeterError("witness failed independent recount")
    return CheckReport(
        type_string,
        _element_label(system, w),
        tuple(sorted(system.left_descents(w))),
        tuple(sorted(I)),
        cert is not None,
        None if cert is None else words.format_word(cert.word),
        stair,
    )


# -- key expansion -------------------------------------------------------------


def run_key_expand(
    alpha,
    D,
    n: int | None = None,
    oracle: str = "peel",
    cross_check: bool = False,
):
    """Expand a key polynomial on the block-Schur basis.

    oracle 'peel' subtracts lead terms of the polynomial; 'ry' counts tableau
    sequences. `cross_check` runs both plus the exact linear solver and
    insists they agree.
    """
    alpha = tuple(alpha)
    if n is None:
        n = max(len(alpha), (max(D) + 1) if D else len(alpha))
    split = polyring.SplitSet(n, tuple(D))
    padded = alpha + (0,) * (n - len(alpha))
    desc = {i + 1 for i in range(n - 1) if padded[i] > padded[i + 1]}
    if not desc <= set(split.D):
        raise ValueError(
            f"descents {sorted(desc)} of the composition lie outside D={split.D}"
        )
    if oracle == "ry":
        expansion = splitrule.ry_expand(padded, split)
    elif oracle == "peel":
        expansion = polyring.split_expand(polyring.key_polynomial(padded), split)
    else:
        raise CoxeterError(f"unknown oracle {oracle!r} (use 'peel' or 'ry')")
    if cross_check:
        kappa = polyring.key_polynomial(padded)
        others = [
            polyring.split_expand(kappa, split).coefficients,
            splitrule.ry_expand(padded, split).coefficients,
            polyring.split_expand_via_solver(kappa, split).coefficients,
        ]
        if any(o != expansion.coefficients for o in others):
            raise CoxeterError("expansion cross-check failed")
    return expansion


def format_expansion(expansion) -> str:
    bits = []
    for lams, c in sorted(expansion.coefficients.items(), reverse=True):
        name = ",".join("(" + ",".join(map(str, lam)) + ")" for lam in lams)
        bits.append(f"{c} * s[{name}]" if c != 1 else f"s[{name}]")
    return "\n".join(bits) if bits else "0"


# -- conjecture consistency ------------------------------------------------------


@dataclass
class ConsistencyReport:
    n: int
    pairs_checked: int
    disagreements: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "disagreements": [
                {
                    "w": typea.format_permutation(line),
                    "I": sorted(I),
                    "witness_search": comb,
                    "staircase": stair,
                }
                for line, I, comb, stair in self.disagreements
            ],
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def summary(self) -> str:
        head = (
            f"n={self.n}: {self.pairs_checked} (w, I) pairs checked, "
            f"{len(self.disagreements)} disagreements ({self.elapsed:.1f}s)"
        )
        if not self.disagreements:
            return head
        rows = [head] + [
            f"  w={typea.format_permutation(line)} I={sorted(I)} "
            f"search={comb} staircase={stair}"
            for line, I, comb, stair in self.disagreements
        ]
        return "\n".join(rows)


def run_consistency(n: int, progress=None) -> ConsistencyReport:
    """Compare the witness search with the staircase-key test on all of S_n.

    For every w and every I inside the left descent set, the two verdicts
    must agree; any disagreement is reported, never silently dropped.
    """
    start = time.time()
    system = coxeter_system(f"A{n - 1}")
    searchers: dict = {}
    cache: dict = {}
    pairs = 0
    disagreements = []
    elements = system.elements()
    for idx, w in enumerate(elements):
        line = typea.element_to_perm(system, w)
        J = tuple(typea.left_descents(line))
        kappa = polyring.key_polynomial(
            polyring.staircase_composition(line), cache
        )
        for r in range(len(J) + 1):
            for I in itertools.combinations(J, r):
                pairs += 1
                Iset = frozenset(I)
                searcher = searchers.get(Iset)
                if searcher is None:
                    searcher = searchers[Iset] = spherical.WitnessSearcher(
                        system, Iset
                    )
                comb = searcher.search(w) is not None
                D = tuple(j for j in range(1, n) if j not in Iset)
                stair = polyring.is_D_multiplicity_free(
                    kappa, polyring.SplitSet(n, D)
                )
                if comb != stair:
                    disagreements.append((line, Iset, comb, stair))
        if progress and (idx + 1) % 100 == 0:
            progress(idx + 1, len(elements))
    return ConsistencyReport(n, pairs, disagreements, time.time() - start)


# -- experiments -----------------------------------------------------------------


EXPERIMENTS = ("pattern-avoidance", "vanishing-density", "upone", "distinct-lambda")


def run_experiment(name: str, n: int | None = None, seed: int = 0) -> dict:
    """Empirical conjecture probes; results are data, not assertions."""
    if name == "pattern-avoidance":
        return _experiment_pattern_avoidance(n or 6)
    if name == "vanishing-density":
        return _experiment_vanishing_density(n or 6)
    if name == "upone":
        return _experiment_upone(n or 5, seed)
    if name == "distinct-lambda":
        return _experiment_distinct_lambda(n or 5, seed)
    raise CoxeterError(
        f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}"
    )


def _s5_bad_patterns() -> list[tuple[int, ...]]:
    report = run_census("A4")
    return [typea.parse_permutation(e) for e in report.nonspherical]


def _experiment_pattern_avoidance(n: int) -> dict:
    """Does every non-spherical element contain a bad rank-5 pattern?"""
    patterns = _s5_bad_patterns()
    unexplained = []
    count = 0
    for m in range(5, n + 1):
        report = run_census(f"A{m - 1}")
        for text in report.nonspherical:
            count += 1
            line = typea.parse_permutation(text)
            if not any(
                typea.contains_perm_pattern(line, p) for p in patterns
            ):
                unexplained.append(text)
    return {
        "experiment": "pattern-avoidance",
        "range": f"5..{n}",
        "nonspherical_checked": count,
        "unexplained": unexplained,
        "consistent": not unexplained,
    }


def _experiment_vanishing_density(n: int) -> dict:
    counts = {}
    for m in range(2, n + 1):
        report = run_census(f"A{m - 1}")
        counts[m] = {
            "total": report.total,
            "nonspherical": len(report.nonspherical),
            "nonspherical_fraction": round(
                len(report.nonspherical) / report.total, 6
            ),
        }
    return {"experiment": "vanishing-density", "counts": counts}


def _random_composition(rng, n: int, maxpart: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, maxpart) for _ in range(n))


def _experiment_upone(n: int, seed: int, trials: int = 200) -> dict:
    """Raising one part (to a value no other part holds) should preserve
    having multiplicity."""
    rng = random.Random(seed)
    tested = 0
    counterexamples = []
    while tested < trials:
        alpha = _random_composition(rng, n, 4)
        j = rng.randrange(n)
        up = list(alpha)
        up[j] += 1
        if any(up[i] == up[j] for i in range(n) if i != j):
            continue
        alpha_up = tuple(up)
        desc = set(typea.descents(alpha)) | set(typea.descents(alpha_up))
        D = tuple(sorted(desc))
        split = polyring.SplitSet(n, D)
        base_mf = polyring.is_D_multiplicity_free(
            polyring.key_polynomial(alpha), split
        )
        if base_mf:
            continue
        tested += 1
        up_mf = polyring.is_D_multiplicity_free(
            polyring.key_polynomial(alpha_up), split
        )
        if up_mf:
            counterexamples.append({"alpha": alpha, "alpha_up": alpha_up, "D": D})
    return {
        "experiment": "upone",
        "n": n,
        "pairs_with_multiplicity_tested": tested,
        "counterexamples": counterexamples,
        "consistent": not counterexamples,
    }


def _experiment_distinct_lambda(n: int, seed: int, tries: int = 40) -> dict:
    """For non-spherical (w, I), hunt a strictly decreasing lambda whose key
    also has split multiplicity."""
    rng = random.Random(seed)
    system = coxeter_system(f"A{n - 1}")
    searchers: dict = {}
    examined = 0
    found = 0
    misses = []
    for w in system.elements():
        line = typea.element_to_perm(system, w)
        J = tuple(typea.left_descents(line))
        Iset = frozenset(J)
        searcher = searchers.get(Iset)
        if searcher is None:
            searcher = searchers[Iset] = spherical.WitnessSearcher(system, Iset)
        if searcher.search(w) is not None:
            continue
        examined += 1
        D = tuple(j for j in range(1, n) if j not in Iset)
        split = polyring.SplitSet(n, D)
        hit = None
        for t in range(tries):
            if t == 0:
                lam = tuple(range(n, 0, -1))
            else:
                steps = sorted(
                    (rng.randint(1, 3) for _ in range(n)), reverse=True
                )
                lam = tuple(
                    sum(steps[i:]) for i in range(n)
                )
            alpha = typea.act_on_composition(line, lam)
            if not polyring.is_D_multiplicity_free(
                polyring.key_polynomial(alpha), split
            ):
                hit = lam
                break
        if hit is None:
            misses.append(typea.format_permutation(line))
        else:
            found += 1
    return {
        "experiment": "distinct-lambda",
        "n": n,
        "nonspherical_examined": examined,
        "distinct_lambda_found": found,
        "unresolved": misses,
        "consistent": not misses,
    }


# -- paranoid cross-checks ---------------------------------------------------------


def paranoid_self_check(n_max: int = 5, seed: int = 0) -> dict:
    """Redundant-route validation across the stack.

    Runs closed forms against the search, both key rules against each other,
    peeling against the linear solver, and the tableau rule against peeling,
    on small ranges. Returns per-check booleans.
    """
    rng = random.Random(seed)
    results = {}

    sys_a = coxeter_system(f"A{n_max - 1}")
    w0 = sys_a.longest_element()
    ok = True
    nodes = list(range(1, n_max))
    for r in range(len(nodes) + 1):
        for I in itertools.combinations(nodes, r):
            if spherical.w0_sphericality_closed_form(
                sys_a, I
            ) != spherical.is_I_spherical(sys_a, w0, I):
                ok = False
    results["w0_closed_form_vs_search"] = ok

    dih = coxeter_system("I2(7)")
    results["dihedral_closed_form_vs_search"] = all(
        spherical.dihedral_classification(dih, w)
        == spherical.is_maximally_spherical(dih, w)
        for w in dih.elements()
    )

    ok = True
    for _ in range(30):
        alpha = _random_composition(rng, rng.randint(2, n_max), 3)
        if polyring.key_polynomial(alpha) != polyring.key_via_kohnert(alpha):
            ok = False
    results["demazure_vs_kohnert"] = ok

    ok = True
    for _ in range(20):
        nn = rng.randint(2, n_max)
        alpha = _random_composition(rng, nn, 3)
        desc = set(typea.descents(alpha))
        extra = [j for j in range(1, nn) if j not in desc]
        rng.shuffle(extra)
        D = tuple(sorted(desc | set(extra[: rng.randint(0, len(extra))])))
        split = polyring.SplitSet(nn, D)
        kappa = polyring.key_polynomial(alpha)
        peel = polyring.split_expand(kappa, split)
        if polyring.split_expand_via_solver(kappa, split) != peel:
            ok = False
        if splitrule.ry_expand(alpha, split).coefficients != peel.coefficients:
            ok = False
    results["peel_vs_solver_vs_tableau_rule"] = ok

    results["all"] = all(results.values())
    return results


def write_json(path: str, payload: dict):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
