"""
Automata app configuration
"""

from django.apps import AppConfig


class AutomataConfig(AppConfig):
    """Finite automata constructions"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'automata'
    verbose_name = 'Automata'
