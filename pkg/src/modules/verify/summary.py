from typing import Dict
from jinja2 import Template  # type: ignore

from .results import SuiteReport

_SUMMARY = Template("""\
# ctm acceptance report

{{ verdict }}: {{ counts.passed }} passed, {{ counts.failed }} failed, {{ counts.skipped }} skipped \
of {{ counts.total }} (seeds {{ seeds|join(", ") }})

Model: {{ model.tracks }} track(s), n_x={{ model.n_x }} on [{{ model.x_min }}, {{ model.x_max }}], \
n_k={{ model.n_k }}, thresholds {{ "generic" if model.generic_thresholds else "not generic" }}

| check | seed | measured | threshold | result |
|---|---|---|---|---|
{% for r in results -%}
| {{ r.check_id }} | {{ r.seed }} | {{ "%.3e"|format(r.measured) }} | {{ "%.3e"|format(r.threshold) }} | \
{{ "skipped" if r.skipped else ("pass" if r.passed else "FAIL") }} |
{% endfor %}
{% for r in results %}
## {{ r.check_id }}

{{ r.anchor }}
{% if r.error %}
Error: {{ r.error }}
{% endif %}
{% for key, value in r.detail.items() -%}
- {{ key }}: {{ value }}
{% endfor %}
{% endfor %}
""")


def render_summary(report: SuiteReport) -> str:
    """Human-readable markdown companion of the machine-readable report."""
    counts: Dict[str, int] = report.counts()
    return _SUMMARY.render(
        verdict="PASS" if report.passed else "FAIL",
        counts=counts,
        seeds=report.seeds,
        model=report.model,
        results=report.results,
    )
