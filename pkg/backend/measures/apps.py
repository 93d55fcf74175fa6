"""
Measures app configuration
"""

from django.apps import AppConfig


class MeasuresConfig(AppConfig):
    """Precision measures"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'measures'
    verbose_name = 'Precision Measures'
