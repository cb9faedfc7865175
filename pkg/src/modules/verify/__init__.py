from .errors import InsufficientSamples
from .fits import DecayFit, FitModel, decay_fit
from .traces import orthogonality_trace, scattering_accepted, trace_ratios
from .bank import notch_factor, profile_bank, random_field, random_profile
from .context import SuiteContext, classify_threshold
from .results import CheckResult, SuiteReport
from .checks import CHECKS, Check, Outcome, check
from .suite import estimate_suite, run_check
from .summary import render_summary

__all__ = [
    'InsufficientSamples', 'DecayFit', 'FitModel', 'decay_fit',
    'orthogonality_trace', 'scattering_accepted', 'trace_ratios',
    'notch_factor', 'profile_bank', 'random_field', 'random_profile',
    'SuiteContext', 'classify_threshold', 'CheckResult', 'SuiteReport',
    'CHECKS', 'Check', 'Outcome', 'check', 'estimate_suite', 'run_check', 'render_summary',
]
