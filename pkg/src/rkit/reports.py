"""CSV and JSON emission for verification reports.

Both formats carry the same field values: the CSV cell for counterexamples
is the semicolon-joined canonical rendering of the same list the JSON
carries, and numbers round-trip exactly via repr.
"""

import csv
import io
import json

from .verification import VerificationReport

CSV_FIELDS = ("case", "domain_lo", "domain_hi", "counterexamples", "min_margin", "elapsed_s")


def format_counterexample(value) -> str:
    if isinstance(value, (list, tuple)):
        return ":".join(format_counterexample(v) for v in value)
    return repr(value) if isinstance(value, float) else str(value)


def report_to_json(report: VerificationReport | list[VerificationReport]) -> str:
    if isinstance(report, list):
        return json.dumps([r.to_dict() for r in report], indent=2, sort_keys=True)
    return json.dumps(report.to_dict(), indent=2, sort_keys=True)


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        writer.writerow(
            [
                r.case_id,
                r.domain_lo,
                r.domain_hi,
                ";".join(format_counterexample(v) for v in r.counterexamples),
                repr(r.min_margin) if isinstance(r.min_margin, float) else r.min_margin,
                repr(r.elapsed_s),
            ]
        )
    return buf.getvalue()


def report_from_dict(data: dict) -> VerificationReport:
    return VerificationReport(
        case_id=data["case"],
        domain_lo=data["domain_lo"],
        domain_hi=data["domain_hi"],
        domain_step=data.get("domain_step", "1"),
        stated_threshold=data.get("stated_threshold", 0),
        counterexamples=data.get("counterexamples", []),
        min_margin=data.get("min_margin", 0.0),
        elapsed_s=data.get("elapsed_s", 0.0),
        extras=data.get("extras", {}),
    )
