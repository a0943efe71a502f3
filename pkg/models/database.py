"""
Database models using SQLAlchemy ORM (verification run ledger)
"""
from datetime import datetime
from sqlalchemy import (
    create_engine, Column, Integer, String, DateTime, Boolean,
    Float, Text, ForeignKey, JSON, CheckConstraint, Index
)
from sqlalchemy.orm import declarative_base, sessionmaker, relationship
from sqlalchemy.pool import StaticPool

from config import get_database_url

# Base class for all models
Base = declarative_base()


class VerificationRun(Base):
    """驗證執行紀錄"""
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    lemma_id = Column(String(10), nullable=False, index=True)
    params = Column(JSON, default=dict)
    instances_checked = Column(Integer, nullable=False, default=0)
    counterexample_count = Column(Integer, nullable=False, default=0)
    asserted = Column(Boolean, default=True)
    wall_time = Column(Float, default=0.0)
    created_at = Column(DateTime, default=datetime.utcnow, index=True)

    __table_args__ = (
        CheckConstraint('instances_checked >= 0', name='check_instances_non_negative'),
        Index('idx_lemma_created', 'lemma_id', 'created_at'),
    )

    # Relationships
    counterexamples = relationship("StoredCounterexample", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<VerificationRun(id={self.id}, {self.lemma_id} checked={self.instances_checked} ce={self.counterexample_count})>"


class StoredCounterexample(Base):
    """反例（以邊列表文字保存，可直接重跑 analyze）"""
    __tablename__ = "counterexamples"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(Integer, ForeignKey('verification_runs.id', ondelete='CASCADE'), nullable=False, index=True)
    graph = Column(String(200), nullable=False)
    edge_list = Column(Text, nullable=False)
    detail = Column(JSON, default=dict)

    # Relationships
    run = relationship("VerificationRun", back_populates="counterexamples")

    def __repr__(self):
        return f"<StoredCounterexample(run_id={self.run_id}, {self.graph})>"


# Database connection setup
def create_db_engine(database_url: str | None = None):
    """Create SQLAlchemy engine"""
    database_url = database_url or get_database_url()
    if database_url.startswith('sqlite'):
        kwargs = {'connect_args': {'check_same_thread': False}}
        if database_url in ('sqlite://', 'sqlite:///:memory:'):
            kwargs['poolclass'] = StaticPool
        return create_engine(database_url, echo=False, **kwargs)
    return create_engine(database_url, pool_pre_ping=True, echo=False)


def get_session_maker(engine=None):
    """Get session maker for database operations"""
    engine = engine or create_db_engine()
    return sessionmaker(autocommit=False, autoflush=False, bind=engine)


def init_db(engine=None):
    """Initialize database (create all tables)"""
    engine = engine or create_db_engine()
    Base.metadata.create_all(bind=engine)
    return engine


_session_factory = None


# Dependency for FastAPI
def get_db():
    """Dependency for getting database session in FastAPI"""
    global _session_factory
    if _session_factory is None:
        _session_factory = get_session_maker(init_db())
    db = _session_factory()
    try:
        yield db
    finally:
        db.close()
