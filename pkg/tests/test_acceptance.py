"""Acceptance suite: one verdict line per criterion.

Run under pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
import itertools
import random
import sys
import time
from dataclasses import dataclass

import pytest

from dicat.core import Budget, check_axioms, failures
from dicat.dinat import (check_dinat_nat_laws, check_dinatural, diagonalize_natural, dummy_dinatural, undummy)
from dicat.dsl import ParseError, parse, show
from dicat.extranat import (Position, connector_boundary, evaluate_connector, fincat_folds, fincat_structure,
                            rel_folds, rel_structure, tensor_connectors, zigzags)
from dicat.fincat.category import chain3, walking_arrow
from dicat.fincat.instance import fincat_dc, random_profunctor, standard_categories
from dicat.fincat.profunctor import ProarrowList, single
from dicat.free import free_dc, random_computad
from dicat.rel import diagonal, rel_dc, tensor_sets
from dicat.transform import check_modification, check_natural, yang_baxter_check

import controls
from oracles import (composition_table, library_partition, oracle_partition, relation_code, tables_associative,
                     tables_unital)
from sampling import agree, fincat_chains, fincat_world, rel_chains, round_trip_naturals, sampled_naturals
from test_dsl import FIXTURES, fixture_text

BUDGET = Budget()
MAX_SIZE = 3


@dataclass
class Verdict:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"criterion {self.number:>2} {'PASS' if self.passed else 'FAIL'}  {self.title}: {self.detail}"


LINES: dict[int, str] = {}


def record(verdict: Verdict) -> Verdict:
    LINES[verdict.number] = verdict.line()
    print(verdict.line())
    return verdict


# ---------------------------------------------------------------------------
# 1. axioms


def rel_oracle_route(rel) -> dict:
    """Exhaustive arrow and proarrow laws of Rel by a route independent of the checker.

    Proarrow composition is compared with boolean matrix tables on every
    composable pair, and the tables are associative and unital on every
    triple. Arrow associativity and unitality are enumerated directly.
    """
    sizes = range(MAX_SIZE + 1)
    tables = {k: composition_table(*k) for k in itertools.product(sizes, repeat=3)}
    tables_associative(tables, sizes)
    tables_unital(tables, sizes)
    by_shape: dict = {}
    for m in rel.proarrows():
        by_shape.setdefault((len(m.src), len(m.tgt)), []).append((relation_code(m), m))
    mismatches = 0
    for (a, b), left in by_shape.items():
        for c in sizes:
            table = tables[(a, b, c)]
            for code_r, r in left:
                for code_s, s in by_shape.get((b, c), []):
                    mismatches += relation_code(rel.procomp(r, s)) != table[code_r, code_s]
    arrows = rel.arrows()
    starting = {}
    for f in arrows:
        starting.setdefault(rel.arrow_src(f), []).append(f)
    for f in arrows:
        mismatches += rel.comp(rel.id_arrow(rel.arrow_src(f)), f) != f or rel.comp(f, rel.id_arrow(rel.arrow_tgt(f))) != f
        for g in starting[rel.arrow_tgt(f)]:
            fg = rel.comp(f, g)
            for h in starting[rel.arrow_tgt(g)]:
                mismatches += rel.comp(fg, h) != rel.comp(f, rel.comp(g, h))
    return {"mismatches": mismatches,
            "laws": {"arrow-assoc", "arrow-unit", "proarrow-assoc", "proarrow-unit"} if mismatches == 0 else set()}


def criterion_1() -> Verdict:
    start = time.perf_counter()
    suites = []
    rel = rel_dc(MAX_SIZE)
    credited = rel_oracle_route(rel)
    suites.append(("Rel", check_axioms(rel, BUDGET), credited["laws"]))
    for seed in range(5):
        G = random_computad(random.Random(seed), max_gens=3)
        suites.append((f"free[{seed}]", check_axioms(free_dc(G), BUDGET), set()))
    suites.append(("FinCat", check_axioms(fincat_dc(standard_categories()), BUDGET), set()))
    elapsed = time.perf_counter() - start
    total = sum(len(reports) for _, reports, _ in suites)
    passed = sum(r.passed for _, reports, _ in suites for r in reports)
    sampled = [f"{name}:{r.law_id}" for name, reports, extra in suites for r in reports
               if not (r.exhaustive or r.law_id in extra)]
    ok = passed == total and not sampled and elapsed <= 10
    detail = (f"{passed}/{total} laws pass, {total - len(sampled)}/{total} exhaustive, "
              f"Rel oracle mismatches {credited['mismatches']}, {elapsed:.1f}s (limit 10s)")
    if sampled:
        per_instance: dict = {}
        for s in sampled:
            name = s.split(":", 1)[0].split("[")[0]
            per_instance[name] = per_instance.get(name, 0) + 1
        laws = sorted({s.split(":", 1)[1] for s in sampled if s.startswith("Rel:")})
        detail += (f"; sampled laws per instance {per_instance}; in Rel: {', '.join(laws)}")
    return Verdict(1, "axiom suite", ok, detail)


# ---------------------------------------------------------------------------
# 2. coend oracle


def criterion_2() -> Verdict:
    rng = random.Random(2024)
    cats = [single(walking_arrow()), single(chain3()), single(walking_arrow(), True), single(chain3(), True)]
    compared = mismatched = 0
    for i in range(50):
        # every pair involves the walking arrow and the three-object chain
        A, B, C = rng.choice(cats[::2]), rng.choice(cats[1::2]), rng.choice(cats)
        if rng.random() < 0.5:
            A, B = B, A
        atoms = [random_profunctor(rng, A, B, rng.randint(1, 3), f"P{i}"),
                 random_profunctor(rng, B, C, rng.randint(1, 3), f"Q{i}")]
        ev = ProarrowList.of(*atoms).evaluation
        for a, c in ev.all_pairs():
            compared += 1
            mismatched += library_partition(ev, a, c) != oracle_partition(atoms, a, c)
    return Verdict(2, "coend oracle", mismatched == 0,
                   f"50 pairs, {compared} index pairs compared, {mismatched} partitions differ (exact match required)")


# ---------------------------------------------------------------------------
# 3. diagonalization


def criterion_3() -> Verdict:
    samples = sampled_naturals("rel") + sampled_naturals("fincat")
    problems = []
    yb = 0
    for alpha in samples:
        if failures(check_natural(alpha, BUDGET)):
            problems.append(f"{alpha.name} not natural")
            continue
        for form in (1, 2):
            bad = failures(check_dinatural(diagonalize_natural(alpha, form), BUDGET))
            if bad:
                problems.append(f"di{form}({alpha.name}) {bad[0].law_id}")
        first, second = alpha.domain.factors
        for p in first.proarrows()[:3]:
            for m in second.proarrows()[:3]:
                yb += 1
                if not yang_baxter_check(alpha, p, m).passed:
                    problems.append(f"Yang-Baxter {alpha.name}")
    return Verdict(3, "diagonalization", not problems and len(samples) == 20,
                   f"{len(samples)} naturals, 2 forms each, {yb} Yang-Baxter instances, "
                   f"{len(problems)} failures" + (f" ({problems[0]})" if problems else ""))


# ---------------------------------------------------------------------------
# 4. dummy and undummy


def criterion_4() -> Verdict:
    trips = failed = 0
    for world in ("rel", "fincat"):
        for alpha in round_trip_naturals(world):
            beta = dummy_dinatural(alpha)
            back = undummy(beta)
            again = dummy_dinatural(back)
            trips += 1
            ok = (back.source is alpha.source and back.target is alpha.target
                  and agree(back, alpha, alpha.domain, alpha.codomain, limit=None)
                  and agree(again, beta, beta.base, beta.codomain, limit=None))
            failed += not ok
    return Verdict(4, "dummy round trips", failed == 0 and trips == 20,
                   f"{trips} samples, both round trips compared on every object, arrow and proarrow, "
                   f"{failed} differ (exact)")


# ---------------------------------------------------------------------------
# 5. dinatural-natural composition


def criterion_5() -> Verdict:
    start = time.perf_counter()
    laws = bad = 0
    first = ""
    for alpha, before, after in rel_chains() + fincat_chains():
        reports = check_dinat_nat_laws(alpha, before, after, BUDGET)
        laws += len(reports)
        for r in failures(reports):
            bad += 1
            first = first or f"{alpha.name} {r.law_id}"
    elapsed = time.perf_counter() - start
    return Verdict(5, "dinatural-natural laws", bad == 0 and elapsed <= 30,
                   f"{laws} law reports over 4 families, {bad} failures{f' ({first})' if first else ''}, "
                   f"{elapsed:.1f}s (limit 30s)")


# ---------------------------------------------------------------------------
# 6. folds


NULLARY = ("dinatural:arrow-identity", "dinatural:proarrow-unit")


def criterion_6() -> Verdict:
    start = time.perf_counter()
    worlds = [("Rel", rel_folds(rel_structure(MAX_SIZE))),
              ("FinCat", fincat_folds(fincat_structure(standard_categories())))]
    failed, sampled, nullary = [], set(), 0
    for name, folds in worlds:
        n = len(folds.structure.dc.objects())
        for fold in (folds.cap, folds.cup):
            for r in check_dinatural(fold, BUDGET):
                if not r.passed:
                    failed.append(f"{name} {fold.name} {r.law_id}")
                if r.law_id in NULLARY:
                    nullary += r.passed and r.exhaustive and r.checked == n
                elif not r.exhaustive:
                    sampled.add(r.law_id.split(":", 1)[1])
    elapsed = time.perf_counter() - start
    ok = not failed and not sampled and nullary == 8
    detail = (f"{len(failed)} failures, blank cap/cup cases exact {nullary}/8, {elapsed:.1f}s")
    if sampled:
        detail += f"; only sampled: {', '.join(sorted(sampled))}"
    return Verdict(6, "folds", ok, detail)


# ---------------------------------------------------------------------------
# 7. zigzags


def mu_is_bijection(witness) -> list[str]:
    C = witness.mu.codomain
    two = single(walking_arrow())
    disk = witness.mu.obj(two)
    inverse = C.invert(disk)
    if inverse is None:
        return ["mu 2 has no inverse"]
    problems = []
    if not C.eq(C.hcomp(disk, inverse), C.id_square_pro(C.boundary(disk).left)):
        problems.append("mu ; mu^-1 is not an identity")
    if not C.eq(C.hcomp(inverse, disk), C.id_square_pro(C.boundary(disk).right)):
        problems.append("mu^-1 ; mu is not an identity")
    table = disk.table()
    left, right = C.boundary(disk).left.evaluation, C.boundary(disk).right.evaluation
    for a, c in itertools.product(two.objects, repeat=2):
        images = [table[(a, c, rep)] for rep in left.classes(a, c)]
        if len(set(images)) != len(images) or sorted(images, key=repr) != sorted(right.classes(a, c), key=repr):
            problems.append(f"mu 2 is not a bijection at {(a, c)}")
    mod = {r.law_id: r for r in check_modification(witness.mu, BUDGET)}
    for law in ("modification:arrow-naturality", "modification:proarrow-naturality"):
        if not mod[law].passed:
            problems.append(f"mu {law}")
    return problems


def criterion_7() -> Verdict:
    problems = []
    rel = rel_folds(rel_structure(MAX_SIZE))
    rz = zigzags(rel)
    _, fz, witness = fincat_world()
    for name, z in (("Rel", rz), ("FinCat", fz)):
        for T in (z.S, z.Z):
            bad = failures(check_natural(T, BUDGET))
            if bad:
                problems.append(f"{name} {T.name} {bad[0].law_id}")
    objects = rel.structure.dc.objects()
    diagonals = sum(rz.S.obj(A) == diagonal(A) for A in objects)
    if diagonals != len(objects):
        problems.append("S A differs from the diagonal")
    problems += mu_is_bijection(witness)
    return Verdict(7, "zigzags", not problems,
                   f"S, Z natural in both instances, S A = diagonal for {diagonals}/{len(objects)} sets, "
                   f"mu 2 bijective with two-sided inverse and natural; {len(problems)} problems"
                   + (f" ({problems[0]})" if problems else ""))


# ---------------------------------------------------------------------------
# 8. connectors


def enumerated_connector(A, B, C) -> set:
    return {(a1 + a2 + b, b2 + c1 + c2)
            for a1, a2, b in itertools.product(A, A, B) for b2, c1, c2 in itertools.product(B, C, C)
            if a1 == a2 and b == b2 and c1 == c2}


def criterion_8() -> Verdict:
    word = tensor_connectors(["ε", "ι", "η"], ["A", "B", "C"])
    boundary = connector_boundary(word)
    want = ((Position("A"), Position("A", True), Position("B")),
            (Position("B"), Position("C", True), Position("C")))
    folds = rel_folds(rel_structure(MAX_SIZE))
    sets = folds.structure.dc.objects()
    triples = differ = 0
    for A, B, C in itertools.product(sets, repeat=3):
        got = evaluate_connector(word, folds, {"A": A, "B": B, "C": C})
        triples += 1
        differ += not (got.src == tensor_sets(A, A, B) and got.tgt == tensor_sets(B, C, C)
                       and got.pairs == enumerated_connector(A, B, C))
    return Verdict(8, "connector typing", boundary == want and differ == 0,
                   f"boundary {'matches' if boundary == want else 'differs'}, Rel evaluation checked on "
                   f"{triples} triples, {differ} differ")


# ---------------------------------------------------------------------------
# 9. negative controls


def criterion_9() -> Verdict:
    found = controls.all_controls()
    missed = [c.name for c in found if not c.caught()]
    return Verdict(9, "negative controls", not missed,
                   f"{len(found) - len(missed)}/{len(found)} corrupted inputs caught with the right witness"
                   + (f"; missed: {', '.join(missed)}" if missed else ""))


# ---------------------------------------------------------------------------
# 10. DSL


def mutate(rng: random.Random, data: bytes) -> bytes:
    out = bytearray(data)
    for _ in range(rng.randint(1, 8)):
        pos = rng.randrange(len(out) + 1)
        kind = rng.randrange(3)
        if kind == 0 and pos < len(out):
            out[pos] = rng.randrange(256)
        elif kind == 1:
            out[pos:pos] = bytes([rng.randrange(256)])
        else:
            del out[pos:pos + rng.randint(1, 16)]
    return bytes(out)


def criterion_10() -> Verdict:
    fixpoints = 0
    for name in FIXTURES:
        doc = parse(fixture_text(name))
        printed = show(doc)
        fixpoints += parse(printed) == doc and show(parse(printed)) == printed
    rng = random.Random(10)
    seeds = [fixture_text(name).encode("utf-8") for name in FIXTURES]
    parsed = rejected = 0
    crashes = []
    for i in range(10 ** 4):
        # half uniform bytes, half damaged fixtures that reach deeper into the grammar
        data = rng.randbytes(rng.randint(0, 120)) if i % 2 == 0 else mutate(rng, rng.choice(seeds))
        try:
            parse(data)
            parsed += 1
        except ParseError:
            rejected += 1
        except Exception as exc:
            crashes.append(f"{type(exc).__name__}: {exc}")
    ok = fixpoints == len(FIXTURES) and not crashes
    return Verdict(10, "DSL", ok,
                   f"fixpoint on {fixpoints}/{len(FIXTURES)} fixtures, 10000 byte strings: {rejected} ParseError, "
                   f"{parsed} parsed, {len(crashes)} other exceptions" + (f" ({crashes[0]})" if crashes else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8,
            criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_acceptance(criterion):
    verdict = record(criterion())
    assert verdict.passed, verdict.line()


if __name__ == "__main__":
    results = [record(criterion()) for criterion in CRITERIA]
    sys.exit(0 if all(v.passed for v in results) else 1)
