"""Report documents shared by the ``check`` and ``verify`` commands."""

from __future__ import annotations

import json
from collections import Counter
from importlib import resources

from . import __version__

SCHEMA_VERSION = 1


def load_schema():
    return json.loads((resources.files("orebaer") / "data" / "report.schema.json").read_text())


def build_report(command, args, entries):
    docs = [e.to_json() for e in entries]
    counts = Counter(d["status"] for d in docs)
    unexpected = [d["id"] for d in docs if not d["expectation_met"]]
    return {
        "tool": "orebaer",
        "version": __version__,
        "schema_version": SCHEMA_VERSION,
        "invocation": {"command": command, "args": args},
        "entries": docs,
        "summary": {
            "total": len(docs),
            "by_status": dict(sorted(counts.items())),
            "unexpected": unexpected,
            "all_expectations_met": not unexpected,
        },
    }


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def strip_timings(obj):
    """Copy of a report with every ``elapsed_ms`` field removed."""
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [strip_timings(v) for v in obj]
    return obj


def to_text(report):
    lines = []
    width = max((len(e["id"]) for e in report["entries"]), default=0)
    notes = {}
    for e in report["entries"]:
        mark = "" if e["expectation_met"] else f"   UNEXPECTED (expected {e['expected']})"
        extra = ""
        if e["status"] == "refuted" and e["witness"] is not None:
            extra = "  witness: " + json.dumps(e["witness"], separators=(",", ":"))
        elif e["status"] == "skipped":
            extra = "  " + e["detail"].get("reason", "")
        elif e["status"] == "hypothesis_not_met":
            extra = "  failed: " + ", ".join(e["detail"].get("hypotheses_failed", []))
            if e["detail"].get("subchecks_passed_anyway"):
                extra += " (conclusion checks passed regardless)"
        lines.append(f"{e['id']:<{width}}  {e['status']:<18}{extra}{mark}")
        example = next((p for p in e["id"].split("/") if p.startswith("EX_")), None)
        if example and e["analog_note"] and not e["analog_note"].startswith("exact"):
            notes.setdefault(example, e["analog_note"])
    if notes:
        lines.append("")
        lines.append("finite analogs:")
        for k, v in sorted(notes.items()):
            lines.append(f"  {k}: {v}")
    s = report["summary"]
    counts = ", ".join(f"{k}={v}" for k, v in s["by_status"].items())
    lines.append("")
    lines.append(f"{s['total']} entries ({counts}); "
                 + ("all expectations met" if s["all_expectations_met"] else f"{len(s['unexpected'])} unexpected"))
    return "\n".join(lines) + "\n"
