"""
共用 fixtures：具名圖、小語料庫、記憶體 SQLite
"""
import pytest

from models.database import create_db_engine, get_session_maker, init_db
from services.corpus_service import enumerate_connected_graphs
from utils.gadgets import bowtie, complete_bipartite, cycle_graph


@pytest.fixture(scope="session")
def corpus5():
    return enumerate_connected_graphs(5)


@pytest.fixture(scope="session")
def corpus6():
    return enumerate_connected_graphs(6)


@pytest.fixture
def triangle():
    return cycle_graph(3)


@pytest.fixture
def square():
    return cycle_graph(4)


@pytest.fixture
def hexagon():
    return cycle_graph(6)


@pytest.fixture
def k23():
    return complete_bipartite(2, 3)


@pytest.fixture
def g6():
    return bowtie()


@pytest.fixture
def db_session():
    engine = init_db(create_db_engine("sqlite://"))
    SessionLocal = get_session_maker(engine)
    session = SessionLocal()
    try:
        yield session
    finally:
        session.close()
        engine.dispose()
