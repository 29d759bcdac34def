"""Create classification_runs table

Revision ID: 001
Revises:
Create Date: 2026-10-19 00:00:00.000000

"""

from collections.abc import Sequence

import sqlalchemy as sa
from alembic import op

revision: str = "001"
down_revision: str | None = None
branch_labels: str | Sequence[str] | None = None
depends_on: str | Sequence[str] | None = None


def upgrade() -> None:
    op.create_table(
        "classification_runs",
        sa.Column("id", sa.Integer(), primary_key=True),
        sa.Column("created_at", sa.Integer(), nullable=False),
        sa.Column("field", sa.String(length=16), nullable=False),
        sa.Column("term_order", sa.String(length=16), nullable=False),
        sa.Column("inputs", sa.Text(), nullable=False),
        sa.Column("classification", sa.String(length=32), nullable=False),
        # NULL staircase: infinitely many standard monomials
        sa.Column("staircase", sa.Integer(), nullable=True),
        sa.Column("am_check", sa.String(length=16), nullable=True),
        sa.Column("reasons", sa.Text(), nullable=False, server_default=""),
        sa.Column("basis_size", sa.Integer(), nullable=False),
        sa.Column("elapsed_ms", sa.Float(), nullable=False, server_default="0"),
    )
    op.create_index(
        "ix_classification_runs_classification",
        "classification_runs",
        ["classification"],
    )


def downgrade() -> None:
    op.drop_index("ix_classification_runs_classification", table_name="classification_runs")
    op.drop_table("classification_runs")
