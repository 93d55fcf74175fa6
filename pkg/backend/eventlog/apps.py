"""
Event log app configuration
"""

from django.apps import AppConfig


class EventlogConfig(AppConfig):
    """Event logs as multisets of traces"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'eventlog'
    verbose_name = 'Event Logs'
