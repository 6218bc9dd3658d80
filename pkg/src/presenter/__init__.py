from src.presenter.census_presenter import CensusPresenter
from src.presenter.check_presenter import CheckPresenter
from src.presenter.condorder_presenter import CondOrderPresenter
from src.presenter.formula_presenter import FormulaPresenter
from src.presenter.gallery_presenter import GalleryPresenter
from src.presenter.saturate_presenter import SaturatePresenter

__all__ = [
    "CensusPresenter",
    "CheckPresenter",
    "CondOrderPresenter",
    "FormulaPresenter",
    "GalleryPresenter",
    "SaturatePresenter",
]
