from config.config_manager import ConfigManager, VERSION

__all__ = ['ConfigManager', 'VERSION']
