import pytest
import sys
from pathlib import Path

from src.modules.core.grid import Grid1D, KLattice
from src.modules.core.profiles import PotentialProfile, ProfileKind
from src.modules.core.tracks import ModelConfig, SolitonTrack
from tests.utils.test_logger import create_test_logger

# Add src directory to Python path
src_path = str(Path(__file__).parent.parent.parent / "src")
if src_path not in sys.path:
    sys.path.append(src_path)


@pytest.fixture
def small_grid() -> Grid1D:
    return Grid1D(-20.0, 20.0, 512)


@pytest.fixture
def small_lattice(small_grid) -> KLattice:
    return small_grid.lattice(8.0)


@pytest.fixture
def test_logger():
    return create_test_logger()


@pytest.fixture
def zero_track() -> SolitonTrack:
    return SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0)


@pytest.fixture
def zero_pair() -> ModelConfig:
    """Two free tracks, well inside the small grid for t <= 1."""
    return ModelConfig(
        tracks=(
            SolitonTrack(omega=1.0, v=2.0, y=5.0, gamma=0.0),
            SolitonTrack(omega=1.0, v=-2.0, y=-5.0, gamma=0.4),
        ),
        t_final=1.0,
    )


@pytest.fixture
def sech2_profile() -> PotentialProfile:
    return PotentialProfile(kind=ProfileKind.SECH2, u_amplitude=-1.0, w_amplitude=0.5, width=1.0, omega=1.0)
