"""
Petri net app configuration
"""

from django.apps import AppConfig


class PetriConfig(AppConfig):
    """Labeled and accepting Petri nets"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'petri'
    verbose_name = 'Petri Nets'
