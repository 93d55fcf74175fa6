"""
Alignment app configuration
"""

from django.apps import AppConfig


class AlignmentConfig(AppConfig):
    """Optimal trace-to-model alignments"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'alignment'
    verbose_name = 'Alignments'
