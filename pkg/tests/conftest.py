import pytest

from elastomix import _kernels
from elastomix.io import default_project
from elastomix.models import PAPER_HARDNESS, PAPER_TRANSPARENCY


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # pay JIT compile cost once, before anything is timed
    _kernels.warmup()


@pytest.fixture(scope="session")
def project():
    return default_project()


@pytest.fixture(scope="session")
def transparency_data(project):
    return project.datasets["transparency"]


@pytest.fixture(scope="session")
def hardness_data(project):
    return project.datasets["hardness"]


@pytest.fixture(scope="session")
def paper_models():
    return (PAPER_TRANSPARENCY, PAPER_HARDNESS)
