"""
Django settings for precision_core project.

The project hosts no web surface; Django provides configuration, logging,
caching and the management-command CLI for the conformance toolkit.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-precision-toolkit-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=lambda v: [s.strip() for s in v.split(',')])


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    # Local apps
    'precision_core',
    'petri',
    'eventlog',
    'automata',
    'alignment',
    'measures',
    'axioms',
    'corpus',
    'conformance',
]

MIDDLEWARE = []


# Database
# Nothing is persisted; the test runner still expects a configured alias.

DATABASES = {
    'default': {
        'ENGINE': config('DB_ENGINE', default='django.db.backends.sqlite3'),
        'NAME': config('DB_NAME', default=':memory:'),
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework (serializers only, no views)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': False,
}

# Cache Configuration - language automata are memoized per net fingerprint
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'precision-cache',
        'TIMEOUT': config('PRECISION_CACHE_TIMEOUT', default=3600, cast=int),
        'OPTIONS': {
            'MAX_ENTRIES': 2000,
        }
    },
}


# Petri net exploration
PRECISION_PETRI_BOUND = config('PRECISION_PETRI_BOUND', default=8, cast=int)  # tokens per place
PRECISION_STATE_CAP = config('PRECISION_STATE_CAP', default=100000, cast=int)
PRECISION_TAU_CAP = config('PRECISION_TAU_CAP', default=64, cast=int)  # consecutive τ firings
PRECISION_SEARCH_BUDGET = config('PRECISION_SEARCH_BUDGET', default=200000, cast=int)

# Alignments
PRECISION_ALIGNMENT_CAP = config('PRECISION_ALIGNMENT_CAP', default=1000, cast=int)
PRECISION_LOG_MOVE_COST = config('PRECISION_LOG_MOVE_COST', default=1, cast=int)
PRECISION_MODEL_MOVE_COST = config('PRECISION_MODEL_MOVE_COST', default=1, cast=int)

# Measures
PRECISION_TRACE_CAP = config('PRECISION_TRACE_CAP', default=100000, cast=int)  # Greco enumeration
PRECISION_PCC_K = config('PRECISION_PCC_K', default=2, cast=int)
PRECISION_MAX_WINDOW = config('PRECISION_MAX_WINDOW', default=5, cast=int)
PRECISION_SAMPLE_RATE = config('PRECISION_SAMPLE_RATE', default=0.5, cast=float)

# Axiom harness
PRECISION_SEED_RUNS = config('PRECISION_SEED_RUNS', default=20, cast=int)
PRECISION_WORKERS = config('PRECISION_WORKERS', default=1, cast=int)


# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': config('PRECISION_LOG_FILE', default=str(BASE_DIR / 'precision.log')),
            'formatter': 'verbose',
            'delay': True,
        },
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': config('PRECISION_LOG_LEVEL', default='INFO'),
    },
}
