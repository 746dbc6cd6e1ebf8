"""Characters of the finite-dimensional simple modules V(lambda).

Dominant weight multiplicities come from Freudenthal's recursion, dimensions
from the Weyl dimension formula.  Tables are memoised per (type, lambda) and
can optionally be persisted as JSON files in a cache directory.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cartan import (
    CartanDatum,
    Weight,
    add,
    dominant_conjugate,
    is_dominant,
    pairing,
    root_to_weight,
    sub,
)

CACHE_FORMAT_VERSION = 1

_memo: dict[tuple[str, int, Weight], "DominantCharacter"] = {}
_cache_dir: Path | None = None


@dataclass(frozen=True)
class DominantCharacter:
    highest: Weight
    mults: dict[Weight, int] = field(hash=False)

    def weights(self) -> list[Weight]:
        return list(self.mults)


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Persist character tables under ``path``; ``None`` keeps them in memory only."""
    global _cache_dir
    _cache_dir = Path(path) if path is not None else None
    if _cache_dir is not None:
        _cache_dir.mkdir(parents=True, exist_ok=True)


def clear_memo() -> None:
    _memo.clear()


def _require_dominant(lam: Weight) -> None:
    if not is_dominant(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")


def dim_simple(d: CartanDatum, lam: Weight) -> int:
    """Weyl dimension formula; with rho = (1,...,1), (x, alpha) = sum_j a_j x_j."""
    lam = tuple(lam)
    _require_dominant(lam)
    num = den = 1
    for a in d.positive_roots:
        num *= sum(aj * (lj + 1) for aj, lj in zip(a, lam))
        den *= sum(a)
    q, r = divmod(num, den)
    assert r == 0
    return q


def dominant_weights_below(d: CartanDatum, lam: Weight) -> list[Weight]:
    """Dominant mu with lam - mu in Q_+, ordered by increasing depth below lam.

    Any two comparable dominant weights are linked by a chain of dominant
    weights differing by positive roots, so a search subtracting positive roots
    reaches all of them.
    """
    lam = tuple(lam)
    _require_dominant(lam)
    roots_w = [root_to_weight(d, a) for a in d.positive_roots]
    seen = {lam}
    frontier = [lam]
    out = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for rw in roots_w:
                nu = sub(mu, rw)
                if is_dominant(nu) and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        out.extend(nxt)
        frontier = nxt
    lr = tuple(c + 1 for c in lam)
    top = pairing(d, lr, lr)
    # Sort by the Freudenthal denominator so every weight above mu is handled first.
    out.sort(key=lambda mu: (top - pairing(d, add(mu, (1,) * d.rank), add(mu, (1,) * d.rank)), mu))
    return out


def _freudenthal(d: CartanDatum, lam: Weight) -> dict[Weight, int]:
    rho = (1,) * d.rank
    lr = add(lam, rho)
    top = pairing(d, lr, lr)
    roots = [(a, root_to_weight(d, a)) for a in d.positive_roots]
    mults: dict[Weight, int] = {}
    for mu in dominant_weights_below(d, lam):
        if mu == lam:
            mults[mu] = 1
            continue
        mr = add(mu, rho)
        denom = top - pairing(d, mr, mr)
        assert denom > 0
        total = 0
        for a, aw in roots:
            k = 1
            nu = add(mu, aw)
            while True:
                m = mults.get(dominant_conjugate(d, nu), 0)
                if m == 0:
                    break
                total += sum(x * y for x, y in zip(nu, a)) * m
                k += 1
                nu = add(nu, aw)
        val = Fraction(2 * total) / denom
        assert val.denominator == 1, "Freudenthal recursion produced a non-integer"
        if val:
            mults[mu] = int(val)
    return mults


def _cache_file(d: CartanDatum, lam: Weight) -> Path | None:
    if _cache_dir is None:
        return None
    tag = "_".join(str(c) for c in lam)
    return _cache_dir / f"char_v{CACHE_FORMAT_VERSION}_{d.series}{d.rank}_{tag}.json"


def _load(path: Path, d: CartanDatum, lam: Weight) -> DominantCharacter | None:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if (
        data.get("version") != CACHE_FORMAT_VERSION
        or data.get("type") != [d.series, d.rank]
        or tuple(data.get("highest", ())) != lam
    ):
        return None
    mults = {tuple(e["mu"]): int(e["mult"]) for e in data["mults"]}
    return DominantCharacter(lam, mults)


def _store(path: Path, d: CartanDatum, ch: DominantCharacter) -> None:
    data = {
        "version": CACHE_FORMAT_VERSION,
        "type": [d.series, d.rank],
        "highest": list(ch.highest),
        "mults": [{"mu": list(mu), "mult": m} for mu, m in ch.mults.items()],
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, path)


def dominant_character(d: CartanDatum, lam: Weight) -> DominantCharacter:
    lam = tuple(lam)
    _require_dominant(lam)
    key = (d.series, d.rank, lam)
    ch = _memo.get(key)
    if ch is not None:
        return ch
    path = _cache_file(d, lam)
    if path is not None and path.exists():
        ch = _load(path, d, lam)
    if ch is None:
        ch = DominantCharacter(lam, _freudenthal(d, lam))
        if path is not None:
            _store(path, d, ch)
    # Concurrent fills compute the same table, so last write wins harmlessly.
    _memo[key] = ch
    return ch


def weight_multiplicity(d: CartanDatum, lam: Weight, mu: Weight) -> int:
    """Multiplicity of the weight mu in V(lam); Weyl-invariant in mu."""
    return dominant_character(d, lam).mults.get(dominant_conjugate(d, mu), 0)
