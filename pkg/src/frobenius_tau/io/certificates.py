"""JSON certificates for command results.

A certificate has four top-level keys: ``command``, ``inputs``, ``result`` and
``meta``. Everything that can vary between runs (timings, version) lives in
``meta`` so ``result`` fields diff cleanly across runs and platforms.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Any, Mapping

from .. import __version__
from ..models.decomposition import FrobeniusDecomposition
from ..models.ideal import IdealHandle
from ..models.reports import (
    FptBracket,
    JumpingNumber,
    JumpScanReport,
    PerturbationCheck,
    StabilityReport,
    TestIdealReport,
)

logger = logging.getLogger(__name__)


def ratio_to_str(value: Fraction | int) -> str:
    return str(Fraction(value))


def ideal_to_strings(ideal: IdealHandle) -> list[str]:
    """Generators of the reduced Gröbner basis, ascending deg-lex by leading term."""

    basis = ideal.reduced_basis
    if basis is None:
        raise ValueError("Ideal must be canonicalised before it is serialised")
    return [str(g) for g in basis]


def decomposition_result(decomposition: FrobeniusDecomposition) -> dict[str, Any]:
    return {
        "e": decomposition.e,
        "parts": [
            {"index": list(index), "part": str(decomposition.part(index))}
            for index in decomposition.indices()
        ],
    }


def test_ideal_result(report: TestIdealReport) -> dict[str, Any]:
    return {
        "ideal": ideal_to_strings(report.ideal),
        "stabilized_at": report.stabilized_at,
        "levels": len(report.chain),
        "capped": report.capped,
        "stop": report.stop.value,
    }


test_ideal_result.__test__ = False  # type: ignore[attr-defined]


def fpt_result(bracket: FptBracket) -> dict[str, Any]:
    return {
        "nu": bracket.nu,
        "e": bracket.e,
        "lo": ratio_to_str(bracket.lo),
        "hi": ratio_to_str(bracket.hi),
        "confirmed": None if bracket.confirmed is None else ratio_to_str(bracket.confirmed),
    }


def jump_scan_result(report: JumpScanReport) -> dict[str, Any]:
    return {
        "jumps": [ratio_to_str(s) for s in report.jumps],
        "grid_size": len(report.grid),
        "capped_points": [ratio_to_str(s) for s in report.capped_points],
    }


def jumping_number_result(jump: JumpingNumber) -> dict[str, Any]:
    return {"value": ratio_to_str(jump.value), "found": jump.found}


def perturbation_result(check: PerturbationCheck) -> dict[str, Any]:
    return {
        "equal": check.equal,
        "trivial_at_origin": check.trivial_at_origin,
        "base": ideal_to_strings(check.base),
        "perturbed": ideal_to_strings(check.perturbed),
    }


def stability_result(report: StabilityReport) -> dict[str, Any]:
    first = report.first_jump
    return {
        "base_tau": ideal_to_strings(report.base_tau),
        "delta_lower": ratio_to_str(report.delta_lower),
        "witnesses": [
            {
                "probe": str(w.probe),
                "level": w.level,
                "ord": w.ord,
                "mult": ratio_to_str(w.mult),
                "equal": w.equal,
            }
            for w in report.witnesses
        ],
        "first_jump": None
        if first is None
        else {"probe": str(first.probe), "level": first.level, "mult": ratio_to_str(first.mult)},
        "tail_index": dict(sorted(report.tail_index.items())),
    }


def build_certificate(
    command: str,
    inputs: Mapping[str, Any],
    result: Mapping[str, Any],
    *,
    elapsed: float,
) -> dict[str, Any]:
    return {
        "command": command,
        "inputs": dict(inputs),
        "result": dict(result),
        "meta": {"elapsed_seconds": round(elapsed, 6), "version": __version__},
    }


def dumps(certificate: Mapping[str, Any]) -> str:
    logger.debug("Serialising certificate for %s", certificate.get("command"))
    return json.dumps(certificate, indent=2, sort_keys=True)
