"""
SQLAlchemy models for the optional ledger of classification runs.
"""

import time

from sqlalchemy import Float, Integer, String, Text, create_engine
from sqlalchemy.orm import Mapped, declarative_base, mapped_column, sessionmaker

Base = declarative_base()


class ClassificationRun(Base):
    """One recorded classification of a parametrization."""

    __tablename__ = "classification_runs"

    id: Mapped[int] = mapped_column(Integer, primary_key=True)
    created_at: Mapped[int] = mapped_column(
        Integer, default=lambda: int(time.time())
    )
    field: Mapped[str] = mapped_column(String(16), nullable=False)
    term_order: Mapped[str] = mapped_column(String(16), nullable=False)
    inputs: Mapped[str] = mapped_column(Text, nullable=False)
    classification: Mapped[str] = mapped_column(String(32), nullable=False, index=True)
    staircase: Mapped[int | None] = mapped_column(
        Integer, nullable=True
    )  # NULL when the variety is infinite
    am_check: Mapped[str | None] = mapped_column(String(16), nullable=True)
    reasons: Mapped[str] = mapped_column(Text, nullable=False, default="")
    basis_size: Mapped[int] = mapped_column(Integer, nullable=False)
    elapsed_ms: Mapped[float] = mapped_column(Float, nullable=False, default=0.0)

    def __repr__(self) -> str:
        return (
            f"<ClassificationRun(id={self.id}, field='{self.field}', "
            f"classification='{self.classification}', inputs='{self.inputs}')>"
        )


def create_engine_and_session(database_url: str = "sqlite:///runs.db"):
    """Create database engine and session factory."""
    engine = create_engine(database_url, echo=False)
    SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)
    return engine, SessionLocal


def init_database(engine) -> None:
    """Initialize database tables."""
    Base.metadata.create_all(bind=engine)
