import json
from typing import Any


def dumps(data: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indentation."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
