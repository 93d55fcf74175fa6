"""
Conformance app configuration
"""

from django.apps import AppConfig


class ConformanceConfig(AppConfig):
    """Command-line surface of the toolkit"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'conformance'
    verbose_name = 'Conformance Commands'
