"""
Configuration settings for the vertex-energy toolkit
"""
from typing import List, Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="VENERGY_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Randomised suites
    seed: int = 42
    max_tree: int = 12
    max_bip: int = 10
    bipartite_edge_prob: float = 0.5
    bipartite_max_redraws: int = 1000

    # Strictness margin for real-valued (in)equalities
    epsilon: float = 1e-8

    # Eigensolver
    # Cyclic Jacobi below this order, LAPACK eigh above it
    jacobi_max_order: int = 40
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100

    # Coulson quadrature
    quad_rel_tol: float = 1e-8
    quad_max_depth: int = 40
    quad_initial_panels: int = 16
    coulson_agreement_tol: float = 1e-6

    # Exact-arithmetic guards
    walk_max_power: int = 32
    cycle_enum_max_order: int = 16

    # Eigenvalues closer than this are treated as one eigenspace
    eigen_cluster_tol: float = 1e-6

    # Star-limit sweep: star sizes n for S_{n+1}
    star_sweep_values: List[int] = [1, 2, 4, 8, 16, 32, 64, 128, 200]

    # Caching / observability
    cache_size: int = 512
    log_level: str = "WARNING"
    metrics_textfile: Optional[str] = None


# Global settings instance
settings = Settings()
