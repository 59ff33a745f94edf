"""Genus-one canonical integrals, Tsuji characteristics and verification suites."""

from ._core import (
    DomainError,
    Field,
    HypothesisError,
    Measure,
    UpFixture,
    carleman,
    closed_form_K1_integral,
    closed_form_K2_integral,
    closed_form_K3_integral,
    eval_canonical,
    eval_canonical_pv,
    hilbert_inputs,
    hilbert_pair,
    jensen_circle_potential,
    kernel_H,
    kernel_K1,
    kernel_K2,
    kernel_K3,
    levin,
    max_modulus,
    nevanlinna_T,
    run_suite,
    suite_names,
    tsuji,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
