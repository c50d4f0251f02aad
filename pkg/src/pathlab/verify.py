"""Named verification sweeps over desk-scale instances.

Each sweep replays one of the library's structural claims exhaustively over
a bounded family and reports the first counterexample, if any.  The CLI
exposes them under the ``verify`` verb; the test suite drives the same
functions at pinned bounds.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator

from .applications import (
    andre_barbier_count,
    brak_essam_counts,
    case1_region,
    case2_region,
    conjecture_52_check,
    conjecture_53_check,
    contact_formula_count,
    direct_contact_count,
    dyck_region,
    path_of_perm,
    perm_of_path,
    perm_stats,
)
from .enumeration import (
    enumerate_paths,
    enumerate_tuples,
    lgv_count,
    path_distribution,
)
from .matroids import (
    LinearOrder,
    activities,
    active_elements,
    bottom_contact_positions,
    left_contact_positions,
    lpm_oracle,
    natural_order,
    north_index_set,
    phi_xy,
    reversed_order,
    uniform_oracle,
)
from .paths import Path, Region, contact_stats, descent_set, noncontact_heights
from .polynomials import MultiPoly
from .swaps import swapall
from .tableaux import (
    YoungShape,
    enumerate_flagged_ssyt,
    expected_weight,
    psi,
    psi_inv,
    region_of_shape,
    weight,
)
from .triangulations import (
    catalan_det,
    enumerate_k_triangulations,
    fan_region,
    nicolas_check,
)
from .tuples import PathTuple, h_stats, u_stats, v_stats
from .words import factorize, switch, switch_inv


@dataclass(frozen=True)
class VerifyResult:
    name: str
    ok: bool
    detail: str
    counterexample: str | None = None

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        extra = f" [{self.counterexample}]" if self.counterexample else ""
        return f"{status:4} {self.name}: {self.detail}{extra}"


def threads_from_env() -> int:
    try:
        return max(1, int(os.environ.get("PATHLAB_THREADS", "1")))
    except ValueError:
        return 1


def monotone_paths(x: int, y: int) -> list[Path]:
    out: list[Path] = []

    def rec(col: int, prev: int, acc: tuple[int, ...]):
        if col == x:
            out.append(Path(acc, y))
            return
        for h in range(prev, y + 1):
            rec(col + 1, h, acc + (h,))

    rec(0, 0, ())
    return out


def all_regions(max_semi: int) -> Iterator[Region]:
    """Every boundary pair with x + y at most the bound."""
    for total in range(0, max_semi + 1):
        for x in range(0, total + 1):
            y = total - x
            paths = monotone_paths(x, y)
            for top in paths:
                for bottom in paths:
                    if all(t >= b for t, b in zip(top.heights, bottom.heights)):
                        yield Region(top, bottom)


# ---------------------------------------------------------------------------


def check_switch_words(max_len: int = 14) -> VerifyResult:
    """Unmatched-letter shape, class bijectivity, and the neighbourhood of
    the flipped letter, over all words up to the length bound."""
    name = "switch-words"
    classes: dict[tuple[int, int, int, int], list[str]] = {}
    total = 0
    for length in range(0, max_len + 1):
        for bits in range(1 << length):
            word = "".join("t" if bits >> i & 1 else "b" for i in range(length))
            bs, ts = factorize(word)
            if bs and ts and max(bs) > min(ts):
                return VerifyResult(name, False, "unmatched letters out of order", word)
            e = word.count("t")
            f = word.count("b")
            u = len(bs) + len(ts)
            classes.setdefault((length, e, f, u), []).append(word)
            total += 1
            if ts:
                flipped = switch(word)
                if switch_inv(flipped) != word:
                    return VerifyResult(name, False, "switch not inverted", word)
                i = next(k for k in range(length) if word[k] != flipped[k])
                if i > 0 and not (word[i - 1] == flipped[i - 1] == "b"):
                    return VerifyResult(name, False, "letter before flip not b", word)
                if i < length - 1 and not (word[i + 1] == flipped[i + 1] == "t"):
                    return VerifyResult(name, False, "letter after flip not t", word)
    for (length, e, f, u), members in classes.items():
        if e == 0 or u < max(e - f, f - e + 2):
            continue
        image = {switch(w) for w in members}
        target = set(classes.get((length, e - 1, f + 1, u), []))
        if image != target:
            return VerifyResult(
                name, False, f"class ({e},{f},{u}) not mapped bijectively", None
            )
    return VerifyResult(name, True, f"{total} words checked up to length {max_len}")


def check_contact_involution(max_semi: int = 8) -> VerifyResult:
    """The contact-exchanging involution on every region and every path with
    prescribed descents: statistics swap, class data preserved, involutive,
    and each descent/heights class has at most one path of each extreme."""
    name = "contact-involution"
    regions = paths = 0
    for region in all_regions(max_semi):
        regions += 1
        class_data: dict[tuple, dict] = {}
        for p in enumerate_paths(region, south_allowed=True):
            paths += 1
            st = contact_stats(region, p)
            image = swapall(region, p)
            ist = contact_stats(region, image)
            if (ist.t, ist.b) != (st.b, st.t):
                return VerifyResult(name, False, "contact counts not exchanged", f"{region} {p}")
            if descent_set(image) != descent_set(p):
                return VerifyResult(name, False, "descent set changed", f"{region} {p}")
            if noncontact_heights(region, image) != noncontact_heights(region, p):
                return VerifyResult(name, False, "free heights changed", f"{region} {p}")
            if swapall(region, image) != p:
                return VerifyResult(name, False, "not an involution", f"{region} {p}")
            key = (descent_set(p), noncontact_heights(region, p))
            data = class_data.setdefault(key, {"dist": {}, "t1b0": 0, "t0b1": 0})
            data["dist"][(st.t, st.b)] = data["dist"].get((st.t, st.b), 0) + 1
            if (st.t, st.b) == (1, 0):
                data["t1b0"] += 1
            if (st.t, st.b) == (0, 1):
                data["t0b1"] += 1
        for key, data in class_data.items():
            if data["t1b0"] > 1 or data["t0b1"] > 1:
                return VerifyResult(name, False, "extreme path not unique", f"{region} {key}")
            for (a, b), count in data["dist"].items():
                if data["dist"].get((b, a), 0) != count:
                    return VerifyResult(name, False, "class distribution asymmetric", f"{region} {key}")
    return VerifyResult(name, True, f"{paths} paths over {regions} regions (x+y <= {max_semi})")


def check_tuple_symmetry(max_semi: int = 6, max_k: int = 3) -> VerifyResult:
    """Coincidence-vector symmetry on every unused-edge class, plus the
    nesting determinant against brute-force counts."""
    name = "tuple-symmetry"
    checked = 0
    for region in all_regions(max_semi):
        for k in range(1, max_k + 1):
            tuples = list(enumerate_tuples(region, k))
            if lgv_count(region, k) != len(tuples):
                return VerifyResult(name, False, "determinant disagrees", f"{region} k={k}")
            by_u: dict[tuple, dict] = {}
            for t in tuples:
                dist = by_u.setdefault(u_stats(t), {})
                h = h_stats(t)
                dist[h] = dist.get(h, 0) + 1
                checked += 1
            for dist in by_u.values():
                for h, count in dist.items():
                    for perm in permutations(range(len(h))):
                        if dist.get(tuple(h[i] for i in perm), 0) != count:
                            return VerifyResult(name, False, "h-distribution asymmetric", f"{region}")
    return VerifyResult(name, True, f"{checked} tuples (x+y <= {max_semi}, k <= {max_k})")


def check_tutte_orders(max_semi: int = 6) -> VerifyResult:
    """Activity polynomial identical under every ground order; natural and
    reversed orders match the contact-pair distributions."""
    name = "tutte-orders"
    regions = 0
    for region in all_regions(max_semi):
        m = region.x + region.y
        oracle = lpm_oracle(region)
        bases = oracle.bases()
        partner: dict[frozenset, dict[int, int]] = {}
        base_set = set(bases)
        for base in bases:
            masks = {}
            for e in range(1, m + 1):
                mask = 0
                for f in range(1, m + 1):
                    if (f in base) == (e in base):
                        continue
                    swapped = base - {e} | {f} if e in base else base - {f} | {e}
                    if frozenset(swapped) in base_set:
                        mask |= 1 << f
                masks[e] = mask
            partner[base] = masks

        reference: dict[tuple[int, int], int] | None = None
        for order in permutations(range(1, m + 1)):
            smaller = {}
            seen = 0
            for e in order:
                smaller[e] = seen
                seen |= 1 << e
            dist: dict[tuple[int, int], int] = {}
            for base in bases:
                masks = partner[base]
                internal = sum(
                    1 for e in base if masks[e] & smaller[e] == 0
                )
                external = sum(
                    1
                    for e in range(1, m + 1)
                    if e not in base and masks[e] & smaller[e] == 0
                )
                dist[(internal, external)] = dist.get((internal, external), 0) + 1
            if reference is None:
                reference = dist
            elif dist != reference:
                return VerifyResult(name, False, "order changed the polynomial", f"{region}")
        regions += 1

        natural = MultiPoly(
            ("x", "y"),
            _activity_dist(partner, bases, tuple(range(1, m + 1)), m),
        )
        reverse = MultiPoly(
            ("x", "y"),
            _activity_dist(partner, bases, tuple(range(m, 0, -1)), m),
        )
        lb = path_distribution(region, ["l", "b"])
        rt = path_distribution(region, ["r", "t"])
        if natural != lb.with_variable_order(("x", "y")):
            return VerifyResult(name, False, "natural order mismatch", f"{region}")
        if reverse != rt.with_variable_order(("x", "y")):
            return VerifyResult(name, False, "reversed order mismatch", f"{region}")
    return VerifyResult(name, True, f"{regions} regions, all ground orders (x+y <= {max_semi})")


def _activity_dist(partner, bases, order, m):
    smaller = {}
    seen = 0
    for e in order:
        smaller[e] = seen
        seen |= 1 << e
    terms: dict[tuple[int, int], int] = {}
    for base in bases:
        masks = partner[base]
        internal = sum(1 for e in base if masks[e] & smaller[e] == 0)
        external = sum(
            1 for e in range(1, m + 1) if e not in base and masks[e] & smaller[e] == 0
        )
        terms[(internal, external)] = terms.get((internal, external), 0) + 1
    return terms


def check_activity_reorder(max_semi: int = 6, max_uniform: int = 5) -> VerifyResult:
    """The adjacent-transposition bijection preserves activity pairs and
    composes to the identity with its mirror, on path matroids and uniform
    matroids."""
    name = "activity-reorder"
    oracles = []
    for region in all_regions(max_semi):
        oracles.append((f"{region}", lpm_oracle(region)))
    for m in range(1, max_uniform + 1):
        for r in range(0, m + 1):
            oracles.append((f"U({r},{m})", uniform_oracle(r, m)))
    checked = 0
    for label, oracle in oracles:
        m = oracle.ground_size
        bases = oracle.bases()
        if not bases:
            continue
        orders = [natural_order(m), reversed_order(m)]
        if m <= 4:
            orders = [LinearOrder(p) for p in permutations(range(1, m + 1))]
        for order in orders:
            for pos in range(m - 1):
                x, y = order.ranking[pos], order.ranking[pos + 1]
                order_prime = order.transpose_adjacent(x, y)
                for base in bases:
                    image = phi_xy(oracle, order, x, y, base)
                    if phi_xy(oracle, order_prime, y, x, image) != base:
                        return VerifyResult(name, False, "mirror composition not identity", f"{label}")
                    if activities(oracle, base, order) != activities(oracle, image, order_prime):
                        return VerifyResult(name, False, "activity pair changed", f"{label}")
                    checked += 1
                images = {phi_xy(oracle, order, x, y, b) for b in bases}
                if len(images) != len(bases):
                    return VerifyResult(name, False, "not a bijection on bases", f"{label}")
    return VerifyResult(name, True, f"{checked} base transpositions checked")


def check_activity_contacts(max_semi: int = 5) -> VerifyResult:
    """With the natural order, internally active elements are exactly the
    north steps shared with the top boundary and externally active elements
    exactly the east steps shared with the bottom boundary."""
    name = "activity-contacts"
    checked = 0
    for region in all_regions(max_semi):
        oracle = lpm_oracle(region)
        order = natural_order(region.x + region.y)
        for p in enumerate_paths(region):
            base = north_index_set(p)
            internal, external = active_elements(oracle, base, order)
            if internal != left_contact_positions(region, p):
                return VerifyResult(name, False, "internal actives differ", f"{region} {p}")
            if external != bottom_contact_positions(region, p):
                return VerifyResult(name, False, "external actives differ", f"{region} {p}")
            checked += 1
    return VerifyResult(name, True, f"{checked} paths checked (x+y <= {max_semi})")


def check_bltr_tuples(max_semi: int = 5, max_k: int = 2) -> VerifyResult:
    """The bottom/left to top/right sweep on tuples: statistics transfer per
    instance and the two joint distributions agree."""
    name = "bltr-tuples"
    from .tuples import bltr_tuple_bijection

    checked = 0
    for region in all_regions(max_semi):
        for k in range(1, max_k + 1):
            tuples = list(enumerate_tuples(region, k))
            source: dict[tuple[int, int], int] = {}
            target: dict[tuple[int, int], int] = {}
            for t in tuples:
                b, l = h_stats(t)[-1], v_stats(t)[0]
                source[(b, l)] = source.get((b, l), 0) + 1
                image = bltr_tuple_bijection(t)
                tt, r = h_stats(image)[0], v_stats(image)[-1]
                if (tt, r) != (b, l):
                    return VerifyResult(name, False, "statistics not transferred", f"{region} k={k}")
                target[(h_stats(t)[0], v_stats(t)[-1])] = (
                    target.get((h_stats(t)[0], v_stats(t)[-1]), 0) + 1
                )
                checked += 1
            if source != target:
                return VerifyResult(name, False, "distributions differ", f"{region} k={k}")
    return VerifyResult(name, True, f"{checked} tuples checked (x+y <= {max_semi}, k <= {max_k})")


def check_tableau_bijection(box: int = 4, max_k: int = 3) -> VerifyResult:
    """The repaired filling is a weight-true bijection onto flagged
    semistandard tableaux for every shape in a square box."""
    name = "tableau-bijection"
    checked = 0
    for shape in shapes_in_box(box):
        region = region_of_shape(shape)
        for k in range(0, max_k + 1):
            tuples = list(_tuples_any_k(region, k))
            images = set()
            for t in tuples:
                tab = psi(t)
                if weight(tab) != expected_weight(t):
                    return VerifyResult(name, False, "weight mismatch", f"{shape} k={k}")
                if psi_inv(tab) != t:
                    return VerifyResult(name, False, "round trip failed", f"{shape} k={k}")
                images.add(tab)
                checked += 1
            ssyt = set(enumerate_flagged_ssyt(shape, k))
            if images != ssyt:
                return VerifyResult(name, False, "image is not all flagged tableaux", f"{shape} k={k}")
    return VerifyResult(name, True, f"{checked} tuples over shapes in a {box}x{box} box, k <= {max_k}")


def _tuples_any_k(region: Region, k: int):
    if k == 0:
        yield PathTuple(region, ())
        return
    yield from enumerate_tuples(region, k)


def shapes_in_box(box: int) -> list[YoungShape]:
    shapes = []

    def rec(parts: tuple[int, ...], maximum: int):
        if parts and parts[0] >= 1:
            shapes.append(YoungShape(parts))
        if len(parts) == box:
            return
        for nxt in range(1, (parts[-1] if parts else maximum) + 1):
            rec(parts + (nxt,), maximum)

    rec((), box)
    return [s for s in shapes if s.width >= 1]


def check_fan_determinants(max_n: int = 9) -> VerifyResult:
    """Catalan determinant, nesting determinant, and brute-force tuple
    counts agree on the staircase regions."""
    name = "fan-determinants"
    cases = [(n, k) for k in (1, 2) for n in range(2 * k + 1, max_n + 1)]
    cases += [(n, 3) for n in range(7, min(max_n, 8) + 1)]
    for n, k in cases:
        region = fan_region(n, k)
        det = catalan_det(n, k)
        brute = sum(1 for _ in enumerate_tuples(region, k))
        lgv = lgv_count(region, k)
        if not det == brute == lgv:
            return VerifyResult(name, False, f"{det} vs {brute} vs {lgv}", f"n={n} k={k}")
    return VerifyResult(name, True, f"{len(cases)} staircase cases up to n = {max_n}")


def check_triangulation_counts(cases=((5, 1), (6, 1), (7, 1), (8, 1), (6, 2), (7, 2), (8, 2))) -> VerifyResult:
    name = "triangulation-counts"
    for n, k in cases:
        count = sum(1 for _ in enumerate_k_triangulations(n, k))
        det = catalan_det(n, k)
        if count != det:
            return VerifyResult(name, False, f"{count} != {det}", f"n={n} k={k}")
        target = k * (n - 2 * k - 1)
        for t in enumerate_k_triangulations(n, k):
            if len(t.diagonals) != target:
                return VerifyResult(name, False, "wrong diagonal count", f"n={n} k={k}")
    return VerifyResult(name, True, f"{len(cases)} polygon cases")


def check_nicolas(cases=((5, 1), (6, 1), (7, 1), (8, 1), (9, 1), (7, 2), (8, 2))) -> VerifyResult:
    name = "triangulation-degrees"
    for n, k in cases:
        report = nicolas_check(n, k)
        if not report.holds:
            return VerifyResult(name, False, "degree distributions differ", f"n={n} k={k}")
    return VerifyResult(name, True, f"{len(cases)} (n, k) cases")


def check_permutation_bridge(max_n: int = 7) -> VerifyResult:
    """The staircase bijection matches contacts with right-to-left extremes
    and descents with the dashed-pattern positions, exhaustively."""
    name = "permutation-bridge"
    checked = 0
    for n in range(1, max_n + 1):
        region = dyck_region(n)
        seen = set()
        by_positions: dict[frozenset, dict] = {}
        for p in enumerate_paths(region, south_allowed=True):
            perm = perm_of_path(p)
            if path_of_perm(perm) != p:
                return VerifyResult(name, False, "round trip failed", f"n={n} {p}")
            rl_min, rl_max, positions = perm_stats(perm)
            st = contact_stats(region, p)
            if (rl_min, rl_max) != (st.t, st.b):
                return VerifyResult(name, False, "extremes do not match contacts", f"{perm}")
            if positions != descent_set(p):
                return VerifyResult(name, False, "pattern positions differ", f"{perm}")
            dist = by_positions.setdefault(positions, {})
            dist[(rl_min, rl_max)] = dist.get((rl_min, rl_max), 0) + 1
            seen.add(perm)
            checked += 1
        if len(seen) != _factorial(n):
            return VerifyResult(name, False, "not onto all permutations", f"n={n}")
        for positions, dist in by_positions.items():
            for (a, b), count in dist.items():
                if dist.get((b, a), 0) != count:
                    return VerifyResult(
                        name, False, "class extreme distribution asymmetric", f"n={n}"
                    )
    return VerifyResult(name, True, f"{checked} paths across n <= {max_n}")


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def check_closed_formulas(max_total: int = 7) -> VerifyResult:
    """Closed counting formulas against brute-force enumeration, including
    the contact-refined versions."""
    name = "closed-formulas"
    for n in range(0, max_total + 1):
        for r in range(0, max_total - n + 1):
            for s in range(0, max_total - n - r + 1):
                if n + r + s > max_total:
                    continue
                region = case1_region(n, r, s)
                brute = sum(1 for _ in enumerate_paths(region))
                if andre_barbier_count(1, (n, r, s)) != brute:
                    return VerifyResult(name, False, "case 1 count", f"n={n} r={r} s={s}")
                if r > 0:
                    for c in range(0, region.x + 2):
                        for i in range(0, c + 1):
                            expected = direct_contact_count(region, i, c - i)
                            got = contact_formula_count(1, (n, r, s), i, c - i)
                            if got != expected:
                                return VerifyResult(
                                    name, False, f"case 1 contacts ({i},{c - i})", f"n={n} r={r} s={s}"
                                )
    for n in range(0, 4):
        for r in range(0, 4):
            for k in range(0, 3):
                region = case2_region(n, r, k)
                brute = sum(1 for _ in enumerate_paths(region))
                if andre_barbier_count(2, (n, r, k)) != brute:
                    return VerifyResult(name, False, "case 2 count", f"n={n} r={r} k={k}")
                if r > 0:
                    for c in range(0, region.x + 2):
                        for i in range(0, c + 1):
                            expected = direct_contact_count(region, i, c - i)
                            got = contact_formula_count(2, (n, r, k), i, c - i)
                            if got != expected:
                                return VerifyResult(
                                    name, False, f"case 2 contacts ({i},{c - i})", f"n={n} r={r} k={k}"
                                )
    return VerifyResult(name, True, f"families swept to total {max_total}")


def check_brak_essam(max_x: int = 8, max_k: int = 2) -> VerifyResult:
    """Return counts of configurations match the truncated-family counts
    for every number of axis returns."""
    name = "watermelons"
    cases = 0
    for k in range(1, max_k + 1):
        for x in range(1, max_x + 1):
            for y in range(x % 2, x + 1, 2):
                lhs, rhs = brak_essam_counts(x, y, k)
                if lhs != rhs:
                    return VerifyResult(name, False, f"{lhs} vs {rhs}", f"x={x} y={y} k={k}")
                cases += 1
    return VerifyResult(name, True, f"{cases} (x, y, k) cases with x <= {max_x}")


def check_conjectures(max_n: int = 4) -> VerifyResult:
    name = "conjectures"
    for n in range(1, max_n + 1):
        r1 = conjecture_52_check(n)
        if not r1.holds:
            return VerifyResult(name, False, "distribution equivalence conjecture", r1.counterexample)
        r2 = conjecture_53_check(n)
        if not r2.holds:
            return VerifyResult(name, False, "sum-dependence conjecture", r2.counterexample)
    return VerifyResult(name, True, f"both conjectures hold for n <= {max_n}")


def check_negative_control() -> VerifyResult:
    """The coincidence-vector count is genuinely asymmetric across classes
    that a naive sum-based reduction would identify."""
    name = "negative-control"
    region = Region.from_steps("NNEE", "ENEN")
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_tuples(region, 2):
        h = h_stats(t)
        counts[h] = counts.get(h, 0) + 1
    if counts.get((0, 1, 2), 0) != 1 or counts.get((1, 1, 1), 0) != 2:
        return VerifyResult(name, False, f"unexpected counts {counts}", None)
    return VerifyResult(name, True, "pair-count control values confirmed")


SUITES: dict[str, Callable[[int], VerifyResult]] = {
    "switch-words": lambda m: check_switch_words(min(2 * m, 14)),
    "contact-involution": lambda m: check_contact_involution(m),
    "tuple-symmetry": lambda m: check_tuple_symmetry(min(m, 8)),
    "tutte-orders": lambda m: check_tutte_orders(min(m, 6)),
    "activity-reorder": lambda m: check_activity_reorder(min(m, 6)),
    "activity-contacts": lambda m: check_activity_contacts(min(m, 5)),
    "bltr-tuples": lambda m: check_bltr_tuples(min(m, 5)),
    "tableau-bijection": lambda m: check_tableau_bijection(min(m, 4)),
    "fan-determinants": lambda m: check_fan_determinants(max(m, 9)),
    "triangulation-counts": lambda m: check_triangulation_counts(),
    "triangulation-degrees": lambda m: check_nicolas(),
    "permutation-bridge": lambda m: check_permutation_bridge(min(m, 7)),
    "closed-formulas": lambda m: check_closed_formulas(min(m, 7)),
    "watermelons": lambda m: check_brak_essam(min(m, 8)),
    "conjectures": lambda m: check_conjectures(min(m, 4)),
    "negative-control": lambda m: check_negative_control(),
}


def _run_one(args: tuple[str, int]) -> VerifyResult:
    name, max_size = args
    return SUITES[name](max_size)


def run_suites(names: list[str], max_size: int) -> list[VerifyResult]:
    """Run the named sweeps, in parallel when PATHLAB_THREADS allows it;
    results keep the order of the names."""
    threads = threads_from_env()
    jobs = [(name, max_size) for name in names]
    if threads > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]
