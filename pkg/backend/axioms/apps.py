"""
Axioms app configuration
"""

from django.apps import AppConfig


class AxiomsConfig(AppConfig):
    """Executable precision axioms"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'axioms'
    verbose_name = 'Precision Axioms'
