"""Exhaustive scans for realized h values at a fixed rank.

Every 3-form with coefficients in [-coeff_max, coeff_max] is enumerated and
its h recorded, keeping one witness per value.  The enumeration splits into
shards by a prefix of the coefficient vector; merged results are independent
of the shard schedule because the per-h witness is the one with the least
serialized document, a commutative/associative/idempotent choice.

Scans prove realization only: a value absent from a bounded scan is not
thereby ruled out.
"""

import json
import os
from dataclasses import dataclass
from itertools import product

from .exterior import blade_basis
from .forms import ThreeForm, serialize_form, trivial
from .homology import h_rank
from .report import CheckReport

SUPPORTED_RANKS = range(1, 7)  # rank 6 is feasible only via sharded runs


@dataclass(frozen=True)
class GeographyResult:
    b: int
    coeff_max: int
    enumerated_count: int
    realized: dict  # h -> witness ThreeForm, keys ascending


def _check_params(b, coeff_max):
    if b not in SUPPORTED_RANKS:
        raise ValueError(f"rank must be in {SUPPORTED_RANKS.start}..{SUPPORTED_RANKS.stop - 1}")
    if coeff_max < 1:
        raise ValueError("coeff_max must be >= 1")


def _shard_layout(n_slots, base, shards):
    """Length of the coefficient prefix used to distribute work over shards.

    When the prefix space is smaller than the shard count, the surplus
    shards simply receive no prefixes; results are unaffected.
    """
    if shards < 1:
        raise ValueError("shard count must be >= 1")
    prefix_len = 0
    space = 1
    while space < shards and prefix_len < n_slots:
        prefix_len += 1
        space *= base
    return prefix_len, space


def _merge_witness(realized, h, form):
    """Keep, per h, the witness with the lexicographically least document."""
    h = int(h)
    old = realized.get(h)
    if old is None or serialize_form(form) < serialize_form(old):
        realized[h] = form


def scan_shard(b, coeff_max, shards, shard_index):
    """Scan one shard; returns (forms enumerated, partial realized map)."""
    _check_params(b, coeff_max)
    if not 0 <= shard_index < shards:
        raise ValueError("shard index out of range")
    triples = blade_basis(b, 3)
    values = range(-coeff_max, coeff_max + 1)
    base = len(values)
    prefix_len, _ = _shard_layout(len(triples), base, shards)
    realized = {}
    count = 0
    for rank_of_prefix, prefix in enumerate(product(values, repeat=prefix_len)):
        if rank_of_prefix % shards != shard_index:
            continue
        for tail in product(values, repeat=len(triples) - prefix_len):
            coeffs = prefix + tail
            terms = tuple((i, j, k, a) for (i, j, k), a in zip(triples, coeffs) if a)
            form = ThreeForm(b, terms)
            count += 1
            _merge_witness(realized, h_rank(form), form)
    return count, realized


def geography_scan(b, coeff_max, shards=1):
    """Full scan, run shard by shard and merged; schedule-independent."""
    _check_params(b, coeff_max)
    if shards < 1:
        raise ValueError("shard count must be >= 1")
    total = 0
    realized = {}
    for i in range(shards):
        count, part = scan_shard(b, coeff_max, shards, i)
        total += count
        for h, form in part.items():
            _merge_witness(realized, h, form)
    realized = dict(sorted(realized.items()))
    return GeographyResult(b=b, coeff_max=coeff_max, enumerated_count=total,
                           realized=realized)


def result_document(result):
    doc = {
        "b": result.b,
        "coeff_max": result.coeff_max,
        "enumerated_count": result.enumerated_count,
        "realized": [
            {"h": h, "witness": {"rank": w.rank, "terms": [list(t) for t in w.terms]}}
            for h, w in sorted(result.realized.items())
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_result(result, path):
    """Atomic write of the canonical result document."""
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(result_document(result))
    os.replace(tmp, path)


def load_result(path):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    realized = {}
    for entry in doc["realized"]:
        w = entry["witness"]
        realized[int(entry["h"])] = ThreeForm(w["rank"], tuple(tuple(t) for t in w["terms"]))
    return GeographyResult(b=doc["b"], coeff_max=doc["coeff_max"],
                           enumerated_count=doc["enumerated_count"], realized=realized)


# ---------------------------------------------------------------------------
# Resumable sharded runs (checkpoint sidecar next to the output file)

def _checkpoint_path(out_path):
    return f"{out_path}.checkpoint.json"


def run_shard_to_checkpoint(b, coeff_max, shards, shard_index, out_path):
    """Run one shard, fold it into the sidecar, and finalize when complete.

    The sidecar records b, coeff_max, the shard count, which shard indices
    are done, and the partial merge.  Re-running a completed shard is a
    no-op; the result file is written (atomically) only once every shard has
    been folded in, so it is always a complete canonical document.
    """
    _check_params(b, coeff_max)
    cp_path = _checkpoint_path(out_path)
    state = {"b": b, "coeff_max": coeff_max, "shards": shards,
             "completed": [], "enumerated_count": 0, "partial": {}}
    if os.path.exists(cp_path):
        with open(cp_path, encoding="utf-8") as fh:
            state = json.load(fh)
        if (state["b"], state["coeff_max"], state["shards"]) != (b, coeff_max, shards):
            raise ValueError("checkpoint was written with different scan parameters")
    if shard_index in state["completed"]:
        return False
    count, part = scan_shard(b, coeff_max, shards, shard_index)
    realized = {int(h): ThreeForm(b, tuple(tuple(t) for t in terms))
                for h, terms in state["partial"].items()}
    for h, form in part.items():
        _merge_witness(realized, h, form)
    state["partial"] = {str(h): [list(t) for t in form.terms]
                        for h, form in sorted(realized.items())}
    state["enumerated_count"] += count
    state["completed"] = sorted(set(state["completed"]) | {shard_index})
    tmp = f"{cp_path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(state, indent=2) + "\n")
    os.replace(tmp, cp_path)
    done = len(state["completed"]) == shards
    if done:
        result = GeographyResult(b=b, coeff_max=coeff_max,
                                 enumerated_count=state["enumerated_count"],
                                 realized=dict(sorted(realized.items())))
        write_result(result, out_path)
    return done


# ---------------------------------------------------------------------------
# Structural checks on scan output

def _support_pieces(form):
    """Partition 1..rank into triple-connected components plus isolated indices."""
    parent = list(range(form.rank + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, k, _ in form.terms:
        for other in (j, k):
            ri, ro = find(i), find(other)
            if ri != ro:
                parent[ro] = ri
    pieces = {}
    for idx in range(1, form.rank + 1):
        pieces.setdefault(find(idx), []).append(idx)
    return sorted(pieces.values())


def _restrict(form, indices):
    """Induced form on a block of indices, relabeled to 1..len(indices)."""
    relabel = {idx: pos + 1 for pos, idx in enumerate(sorted(indices))}
    coeffs = {}
    for i, j, k, a in form.terms:
        if i in relabel and j in relabel and k in relabel:
            coeffs[(relabel[i], relabel[j], relabel[k])] = a
    return ThreeForm.from_coeffs(len(indices), coeffs)


def check_reducible_constraints(result):
    """Cross-check block-structured witnesses against the connected-sum law.

    Every witness whose support splits into >= 2 blocks must satisfy
    h = 2^(pieces-1) * product of the piece values; at rank 5 that pins
    h to {12, 16}.  Odd-h witnesses are flagged as rationally irreducible
    candidates.
    """
    if result.b > 5:
        raise ValueError("reducible constraints are checked for rank <= 5")
    rep = CheckReport(f"reducible constraints for b = {result.b}")
    for h, witness in sorted(result.realized.items()):
        if h % 2:
            rep.add(f"h = {h}: odd, rationally irreducible witness", True,
                    serialize_form(witness).strip().replace("\n", " "))
        pieces = _support_pieces(witness)
        if len(pieces) < 2:
            continue
        predicted = 2 ** (len(pieces) - 1)
        for piece in pieces:
            predicted *= int(h_rank(_restrict(witness, piece)))
        rep.add(f"h = {h}: block witness obeys the product law",
                predicted == h, f"{len(pieces)} pieces predict {predicted}")
        if result.b == 5:
            rep.add(f"h = {h}: rank-5 block value in {{12, 16}}", h in (12, 16), str(h))
    if not rep.items:
        rep.add("no block-structured witnesses", True)
    return rep
