from .loader import ConfigError, load_config
from .models import RautomataConfig

__all__ = ["ConfigError", "RautomataConfig", "load_config"]
