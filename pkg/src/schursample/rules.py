"""The local growth bijections and their inverses.

Each ``grow_*`` rule maps three corner partitions plus one random integer to
the fourth corner of a growth-diagram box, bijectively in (kappa, rand) for
fixed (lam, mu).  Weight balance: |lam| + |mu| + rand = |kappa| + |nu| for the
four box rules; the diagonal rules balance 2|mu| + G (or + 2G, or + 0).

Input validation is gated on :func:`set_checks` so the release path keeps the
O(max(len, largest part)) per-box cost.  ``shrink`` always validates, since it
must report inconsistent inputs.
"""
from __future__ import annotations

from typing import Tuple

from .partitions import (
    Partition,
    conjugate,
    interlaces_h,
    interlaces_v,
    part,
)

_INF = float("inf")

_CHECKS = False


def set_checks(on: bool) -> bool:
    """Enable pre/postcondition checking inside the growth rules; returns the
    previous setting."""
    global _CHECKS
    prev = _CHECKS
    _CHECKS = on
    return prev


def checks_enabled() -> bool:
    return _CHECKS


class GrowthError(ValueError):
    pass


def _trim(rows) -> Partition:
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def _require(cond: bool, msg: str):
    if not cond:
        raise GrowthError(msg)


def grow_hh(lam: Partition, mu: Partition, kap: Partition, g: int) -> Partition:
    """Cauchy rule: nu_1 = max(lam_1, mu_1) + G and
    nu_i = max(lam_i, mu_i) + min(lam_{i-1}, mu_{i-1}) - kap_{i-1} for i > 1.

    Requires lam >= kap and mu >= kap (horizontal strips); produces nu with
    nu >= lam and nu >= mu.
    """
    if _CHECKS:
        _require(g >= 0, "G must be nonnegative")
        _require(interlaces_h(lam, kap), f"precondition lam > kap fails: {lam} {kap}")
        _require(interlaces_h(mu, kap), f"precondition mu > kap fails: {mu} {kap}")
    n = max(len(lam), len(mu)) + 1
    rows = [max(part(lam, 1), part(mu, 1)) + g]
    for i in range(2, n + 1):
        li, mi = part(lam, i), part(mu, i)
        lp, mp = part(lam, i - 1), part(mu, i - 1)
        rows.append((li if li > mi else mi) + (lp if lp < mp else mp) - part(kap, i - 1))
    nu = _trim(rows)
    if _CHECKS:
        _require(interlaces_h(nu, lam) and interlaces_h(nu, mu), "HH output interlacing")
        _require(sum(lam) + sum(mu) + g == sum(kap) + sum(nu), "HH weight balance")
    return nu


def grow_vv(lam: Partition, mu: Partition, kap: Partition, g: int) -> Partition:
    """Dual of grow_hh: conjugate everything, apply grow_hh, conjugate back."""
    if _CHECKS:
        _require(interlaces_v(lam, kap), f"precondition lam >' kap fails: {lam} {kap}")
        _require(interlaces_v(mu, kap), f"precondition mu >' kap fails: {mu} {kap}")
    return conjugate(grow_hh(conjugate(lam), conjugate(mu), conjugate(kap), g))


def _hv_positions(lam: Partition, mu: Partition):
    """Index lists (i_list, j_list) of the block conditions.

    j-positions satisfy lam_i <= mu_i < lam_{i-1} (nu may gain a box there);
    i-positions satisfy mu_{i+1} < lam_i <= mu_i (kappa may lose one).  They
    interleave as j_1 <= i_1 < j_2 <= ... < j_{r+1}.
    """
    n = max(len(lam), len(mu)) + 1
    i_list, j_list = [], []
    prev_lam = _INF
    for i in range(1, n + 1):
        li, mi = part(lam, i), part(mu, i)
        if li <= mi < prev_lam:
            j_list.append(i)
        if part(mu, i + 1) < li <= mi:
            i_list.append(i)
        prev_lam = li
    return i_list, j_list


def grow_hv(lam: Partition, mu: Partition, kap: Partition, b: int) -> Partition:
    """Dual Cauchy rule with a cascading bit.

    Requires kap <' lam (vertical strip) and kap < mu; produces nu with
    nu >= lam and nu >=' mu.  The input bit is consumed at the first
    j-position; each i-position emits the next bit lam_i - kap_i.
    """
    if _CHECKS:
        _require(b in (0, 1), "B must be a bit")
        _require(interlaces_v(lam, kap), f"precondition lam >' kap fails: {lam} {kap}")
        _require(interlaces_h(mu, kap), f"precondition mu > kap fails: {mu} {kap}")
    n = max(len(lam), len(mu)) + 1
    rows = []
    bit = b
    prev_lam = _INF
    for i in range(1, n + 1):
        li, mi = part(lam, i), part(mu, i)
        hi = li if li > mi else mi
        if li <= mi < prev_lam:
            rows.append(hi + bit)
        else:
            rows.append(hi)
        if part(mu, i + 1) < li <= mi:
            bit = li - part(kap, i)
            if _CHECKS:
                _require(bit in (0, 1), "cascaded bit out of range")
        prev_lam = li
    nu = _trim(rows)
    if _CHECKS:
        i_list, j_list = _hv_positions(lam, mu)
        _require(len(j_list) == len(i_list) + 1, "block count mismatch")
        for k, ik in enumerate(i_list):
            _require(j_list[k] <= ik < j_list[k + 1], "block interleaving violated")
        _require(interlaces_h(nu, lam) and interlaces_v(nu, mu), "HV output interlacing")
        _require(sum(lam) + sum(mu) + b == sum(kap) + sum(nu), "HV weight balance")
    return nu


def grow_vh(lam: Partition, mu: Partition, kap: Partition, b: int) -> Partition:
    """Mirror of grow_hv with the roles of lam and mu exchanged: requires
    lam > kap and mu >' kap, produces nu >=' lam and nu >= mu."""
    return grow_hv(mu, lam, kap, b)


GROW = {"HH": grow_hh, "HV": grow_hv, "VH": grow_vh, "VV": grow_vv}


def grow(kind: str, lam: Partition, mu: Partition, kap: Partition, rand: int) -> Partition:
    if kind in ("HV", "VH") and rand not in (0, 1):
        raise GrowthError(f"{kind} box takes a bit, got {rand}")
    return GROW[kind](lam, mu, kap, rand)


def _shrink_hh(lam: Partition, nu: Partition, mu: Partition):
    g = part(nu, 1) - max(part(lam, 1), part(mu, 1))
    n = max(len(lam), len(mu))
    rows = []
    for i in range(1, n + 1):
        rows.append(
            max(part(lam, i + 1), part(mu, i + 1))
            + min(part(lam, i), part(mu, i))
            - part(nu, i + 1)
        )
    return _trim(rows), g


def _shrink_hv(lam: Partition, nu: Partition, mu: Partition):
    i_list, j_list = _hv_positions(lam, mu)
    bits = [part(nu, j) - max(part(lam, j), part(mu, j)) for j in j_list]
    b = bits[0]
    n = max(len(lam), len(mu))
    rows = []
    consumed = {ik: bits[k + 1] for k, ik in enumerate(i_list)}
    for i in range(1, n + 1):
        base = min(part(lam, i), part(mu, i))
        rows.append(base - consumed.get(i, 0))
    return _trim(rows), b


def shrink(kind: str, lam: Partition, nu: Partition, mu: Partition) -> Tuple[Partition, int]:
    """Invert the matching grow rule: the unique (kappa, rand) with
    grow(kind, lam, mu, kappa, rand) == nu.  Raises GrowthError when no
    preimage exists."""
    try:
        if kind == "HH":
            kap, rand = _shrink_hh(lam, nu, mu)
        elif kind == "VV":
            kapc, rand = _shrink_hh(conjugate(lam), conjugate(nu), conjugate(mu))
            kap = conjugate(kapc)
        elif kind == "HV":
            kap, rand = _shrink_hv(lam, nu, mu)
        elif kind == "VH":
            kap, rand = _shrink_hv(mu, nu, lam)
        else:
            raise KeyError(kind)
        if rand < 0 or (kind in ("HV", "VH") and rand > 1):
            raise GrowthError(f"no preimage: recovered rand={rand}")
        if any(r < 0 for r in kap) or not all(
            kap[i] >= kap[i + 1] for i in range(len(kap) - 1)
        ):
            raise GrowthError(f"no preimage: recovered kappa={kap}")
    except GrowthError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise GrowthError(f"no preimage for {kind} box: {exc}") from exc
    prev = set_checks(False)
    try:
        check = GROW[kind](lam, mu, kap, rand)
    finally:
        set_checks(prev)
    if check != nu:
        raise GrowthError(
            f"no preimage: grow({kind}, {lam}, {mu}, {kap}, {rand}) = {check} != {nu}"
        )
    return kap, rand


def grow_diag_h(mu: Partition, kap: Partition, g: int) -> Partition:
    """Diagonal (free boundary) rule: nu_1 = mu_1 + G and
    nu_i = mu_i + mu_{i-1} - kap_{i-1}; balances 2|mu| + G = |kap| + |nu|."""
    if _CHECKS:
        _require(g >= 0, "G must be nonnegative")
        _require(interlaces_h(mu, kap), f"precondition mu > kap fails: {mu} {kap}")
    n = len(mu) + 1
    rows = [part(mu, 1) + g]
    for i in range(2, n + 1):
        rows.append(part(mu, i) + part(mu, i - 1) - part(kap, i - 1))
    nu = _trim(rows)
    if _CHECKS:
        _require(interlaces_h(nu, mu), "diag-H output interlacing")
        _require(2 * sum(mu) + g == sum(kap) + sum(nu), "diag-H weight balance")
    return nu


def grow_diag_h_er(mu: Partition, kap: Partition, g: int) -> Partition:
    """Even-rows diagonal rule: nu_1 = 2*ceil(mu_1/2) + 2G and
    nu_i = 2*ceil(mu_i/2) + 2*floor(mu_{i-1}/2) - kap_{i-1}.

    Maps even-rowed kappa < mu to even-rowed nu > mu; balances 2|mu| + 2G.
    """
    if any(v % 2 for v in kap):
        raise GrowthError(f"kappa must have even rows, got {kap}")
    if _CHECKS:
        _require(g >= 0, "G must be nonnegative")
        _require(interlaces_h(mu, kap), f"precondition mu > kap fails: {mu} {kap}")
    n = len(mu) + 1
    rows = [2 * ((part(mu, 1) + 1) // 2) + 2 * g]
    for i in range(2, n + 1):
        rows.append(
            2 * ((part(mu, i) + 1) // 2)
            + 2 * (part(mu, i - 1) // 2)
            - part(kap, i - 1)
        )
    nu = _trim(rows)
    if _CHECKS:
        _require(all(v % 2 == 0 for v in nu), "diag-HER output must have even rows")
        _require(interlaces_h(nu, mu), "diag-HER output interlacing")
        _require(2 * sum(mu) + 2 * g == sum(kap) + sum(nu), "diag-HER weight balance")
    return nu


def grow_diag_h_ec(mu: Partition, kap: Partition) -> Partition:
    """Even-columns diagonal rule (deterministic): nu_1 = mu_1 and
    nu_i = mu_i + mu_{i-1} - kap_{i-1}; balances 2|mu| = |kap| + |nu|."""
    if any(v % 2 for v in conjugate(kap)):
        raise GrowthError(f"kappa must have even columns, got {kap}")
    if _CHECKS:
        _require(interlaces_h(mu, kap), f"precondition mu > kap fails: {mu} {kap}")
    nu = grow_diag_h(mu, kap, 0)
    if _CHECKS:
        _require(all(v % 2 == 0 for v in conjugate(nu)), "diag-HEC output even columns")
    return nu


def grow_diag_v(mu: Partition, kap: Partition, g: int) -> Partition:
    """Conjugated free diagonal rule, for VV-type diagonal boxes."""
    return conjugate(grow_diag_h(conjugate(mu), conjugate(kap), g))


def grow_diag_v_er(mu: Partition, kap: Partition) -> Partition:
    """Even-rows constraint on a VV diagonal box: conjugating turns it into
    the even-columns rule, so this variant is deterministic.  Maps kappa
    (even rows, kappa <' mu) to nu (even rows, nu >' mu)."""
    return conjugate(grow_diag_h_ec(conjugate(mu), conjugate(kap)))


def grow_diag_v_ec(mu: Partition, kap: Partition, g: int) -> Partition:
    """Even-columns constraint on a VV diagonal box: the conjugated
    even-rows rule, consuming one geometric value."""
    return conjugate(grow_diag_h_er(conjugate(mu), conjugate(kap), g))


def shrink_diag(kind: str, mu: Partition, nu: Partition) -> Tuple[Partition, int]:
    """Invert a diagonal rule; kind in {H, HER, HEC, V, VER, VEC}.

    Returns (kappa, G); G is 0 for the deterministic even-columns rules.
    """
    if kind.startswith("V"):
        # conjugation swaps the even-rows and even-columns constraints
        dual = {"V": "H", "VER": "HEC", "VEC": "HER"}[kind]
        kap, g = shrink_diag(dual, conjugate(mu), conjugate(nu))
        return conjugate(kap), g
    n = len(mu)
    if kind == "H":
        g = part(nu, 1) - part(mu, 1)
        rows = [part(mu, i + 1) + part(mu, i) - part(nu, i + 1) for i in range(1, n + 1)]
        forward = lambda k, gg: grow_diag_h(mu, k, gg)
    elif kind == "HER":
        g2 = part(nu, 1) - 2 * ((part(mu, 1) + 1) // 2)
        if g2 < 0 or g2 % 2:
            raise GrowthError(f"no preimage: bad top row {nu} over {mu}")
        g = g2 // 2
        rows = [
            2 * ((part(mu, i + 1) + 1) // 2) + 2 * (part(mu, i) // 2) - part(nu, i + 1)
            for i in range(1, n + 1)
        ]
        forward = lambda k, gg: grow_diag_h_er(mu, k, gg)
    elif kind == "HEC":
        g = 0
        rows = [part(mu, i + 1) + part(mu, i) - part(nu, i + 1) for i in range(1, n + 1)]
        forward = lambda k, gg: grow_diag_h_ec(mu, k)
    else:
        raise KeyError(kind)
    if any(r < 0 for r in rows):
        raise GrowthError(f"no preimage: negative kappa row for {kind}")
    kap = _trim(rows)
    if g < 0 or not all(kap[i] >= kap[i + 1] for i in range(len(kap) - 1)):
        raise GrowthError(f"no preimage for diagonal {kind}")
    if forward(kap, g) != nu:
        raise GrowthError(f"no preimage for diagonal {kind}: roundtrip mismatch")
    return kap, g
