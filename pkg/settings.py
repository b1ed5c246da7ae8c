from pydantic_settings import BaseSettings, SettingsConfigDict


class Cost(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='ALLREDUCE_COST_')

    """start-up latency of one communication step"""
    alpha: float = 1.0
    """transmission time per element"""
    beta: float = 0.001
    """time per element for one application of the reduction operator"""
    gamma: float = 0.0005


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='ALLREDUCE_')

    """Able to see additional logs"""
    debug: bool = False
    """Default number of simulated processes"""
    procs: int = 6
    """Pipeline block size in elements, fixed like a compile-time setting"""
    block_size: int = 16000
    """Default reduction operator name"""
    operator: str = "sum"
    """Seed for the random exact inputs"""
    seed: int = 0
    """Measurement rounds per sweep cell, the minimum is reported"""
    reps: int = 1
    """Default element-count sweep bounds, lo:hi"""
    sweep: str = "0:8388608"


cost = Cost()
settings = Settings()
