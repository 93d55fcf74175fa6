"""
Precision core application configuration
"""

from django.apps import AppConfig


class PrecisionCoreConfig(AppConfig):
    """Configuration for the shared settings, errors and cache helpers"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'precision_core'
    verbose_name = 'Precision Core'
