"""Run reports written by every command"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from src.config.app_config import AppConfig
from src.util.codec import canonical_json


@dataclass
class RunReport:
    """Everything needed to audit or replay one command.

    Identical command, inputs and seed give byte-identical text; elapsed time
    is logged, never stored here.
    """

    command: Dict[str, Any]
    inputs: Dict[str, str] = field(default_factory=dict)
    seed: Optional[int] = None
    results: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        config = AppConfig()
        return {
            "tool": config.APP_NAME,
            "version": config.APP_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "results": self.results,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())
