import logging
import os


class AppConfig:
    """Configuration settings for the extremal workbench"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not hasattr(self, "initialized"):
            # Application settings
            self.APP_NAME = "extremal-workbench"
            self.APP_VERSION = "1.0.0"

            # Initialize all other settings
            self._init_settings()
            self.initialized = True
            try:
                self._apply_environment()
            except ValueError:
                # Defaults stand; reset() raises the same error for the CLI
                self._init_settings()

    def _init_settings(self):

        # Orbit enumeration: |Sym(X)| grows as n!, 8! = 40320
        self.ORBIT_CAP = 8

        # Henson defect search, |H| <= cap
        self.HENSON_CAP = 4

        # Largest forbidden structure turned into a sentence
        self.EMBED_CAP = 6

        # Search budgets
        self.CENSUS_BUDGET = 4_000_000
        self.EXACT_BUDGET = 200_000

        # Condensation order
        self.CONDORDER_EXHAUSTIVE_MAX = 3
        self.CONDORDER_SAMPLED_MAX = 4
        self.CONDORDER_SAMPLE_SIZE = 400
        self.CONDORDER_SPOT_CHECKS = 3

        # Reproducibility
        self.DEFAULT_SEED = 0

        # Logging
        self.LOG_NAME = "Extremal"
        self.LOG_LEVEL = logging.INFO
        self.LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"
        self.LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"

    def _apply_environment(self):
        """Apply EXTREMAL_* environment overrides"""
        budget = os.environ.get("EXTREMAL_BUDGET")
        if budget:
            try:
                value = int(budget)
            except ValueError:
                raise ValueError(f"EXTREMAL_BUDGET must be an integer, got {budget!r}")
            if value < 1:
                raise ValueError("EXTREMAL_BUDGET must be positive")
            self.CENSUS_BUDGET = value
            self.EXACT_BUDGET = value

        level = os.environ.get("EXTREMAL_LOG_LEVEL")
        if level:
            self.LOG_LEVEL = logging.getLevelName(level.upper())

    def override(self, **settings):
        """Override settings by attribute name, e.g. override(EXACT_BUDGET=10)"""
        for name, value in settings.items():
            if not hasattr(self, name):
                raise KeyError(f"Unknown setting: {name}")
            if value is not None:
                setattr(self, name, value)

    def reset(self):
        """Restore defaults, environment overrides included"""
        self._init_settings()
        self._apply_environment()
