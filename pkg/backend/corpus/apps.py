"""
Corpus app configuration
"""

from django.apps import AppConfig


class CorpusConfig(AppConfig):
    """Embedded counterexample models and logs"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'corpus'
    verbose_name = 'Corpus'
