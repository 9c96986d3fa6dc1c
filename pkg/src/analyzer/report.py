"""
Text layouts for recognition results
"""

import re
from typing import Iterable, List, Tuple

from analyzer.mining import EMPTY, Meaning, Recognition
from analyzer.patterns import FeatureKind

_CALL = re.compile(r"^(?P<kind>[a-z]+)\((?P<target>.*)\)$")


def _constraint_text(rendered: str) -> str:
    # reject(st-beh) -> Reject st-beh
    match = _CALL.match(rendered)
    if not match:
        return rendered
    return f"{match.group('kind').capitalize()} {match.group('target')}"


def meaning_lines(meaning: Meaning) -> List[str]:
    lines = [f"Name: {meaning.name}"]
    if meaning.variation:
        lines.append(f"Variation: {', '.join(meaning.variation)}")
    lines.append(f"Decomposition: {'; '.join(meaning.decomposition) or EMPTY}")
    constraints = [_constraint_text(c) for c in meaning.constraint]
    lines.append(f"Constraint: {'; '.join(constraints) or EMPTY}")
    lines.append(f"Included in: {meaning.included_in_text}")
    return lines


def format_meaning(recognition: Recognition) -> str:
    """Render a recognition as the `Feature / Type / Meaning` block"""
    lines = [
        f"Feature: {recognition.meaning.name}",
        f"Type: {recognition.kind.label}",
        "Meaning:",
    ]
    lines.extend(f"  {line}" for line in meaning_lines(recognition.meaning))
    return "\n".join(lines) + "\n"


def format_classification(rows: Iterable[Tuple[str, FeatureKind]]) -> str:
    rows = list(rows)
    if not rows:
        return ""
    width = max(len(name) for name, _ in rows)
    return "".join(f"{name.ljust(width)}  {kind.value}\n" for name, kind in rows)
