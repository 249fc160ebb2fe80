"""
Django settings for samplerbench_project project.

The numerical library lives in the ``sampling`` app; its experiment defaults
are the ``BENCH_*`` settings at the bottom of this file.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-samplerbench-development-key-change-me',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DJANGO_DEBUG', '1') == '1'

ALLOWED_HOSTS = ['127.0.0.1', 'localhost']


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'sampling',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'samplerbench_project.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            "context_processors": [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (admin only)

STATIC_URL = '/static/'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'bench': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'bench',
        },
    },
    'loggers': {
        'sampling': {
            'handlers': ['console'],
            'level': os.environ.get('BENCH_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}


# Benchmark profiles. A profile is a complete experiment configuration; a
# JSON file passed with --config overrides it key by key.

_SBM = {
    'cluster_count': 10,
    'size_success_prob': 0.08,
    'intra_prob': 0.7,
    'inter_prob': 0.01,
    'max_regen_attempts': 20,
    'repair': True,
    'cluster_sizes': None,
}

_TRAINER = {
    'horizon': 4,
    'learn_rate': 0.05,
    'batch_size': 10,
    'episodes': 2000,
    'rmsprop_decay': 0.9,
    'rmsprop_eps': 1e-8,
    'early_stop_threshold': None,
    'early_stop_window': 10,
}

_SOLVER = {
    'max_iters': 10000,
    'rel_tol': 1e-7,
    'tau': None,
    'sigma': None,
}

BENCH_PROFILES = {
    'desk': {
        'sbm': _SBM,
        'trainer': _TRAINER,
        'solver': _SOLVER,
        'train_graphs': 20,
        'test_graphs': 100,
        'budgets': [0.1, 0.2, 0.3, 0.4, 0.5],
        'train_budget': 0.2,
        'master_seed': 2018,
        'output_dir': 'runs/desk',
        'workers': os.cpu_count() or 1,
        'db_floor': -120.0,
        'baseline_trials': 50,
    },
    'full': {
        'sbm': _SBM,
        'trainer': {**_TRAINER, 'episodes': 10000},
        'solver': _SOLVER,
        'train_graphs': 500,
        'test_graphs': 500,
        'budgets': [0.1, 0.2, 0.3, 0.4, 0.5],
        'train_budget': 0.2,
        'master_seed': 2018,
        'output_dir': 'runs/full',
        'workers': os.cpu_count() or 1,
        'db_floor': -120.0,
        'baseline_trials': 50,
    },
}

BENCH_DEFAULT_PROFILE = 'desk'

# Persist run/policy/result records in the database next to the text outputs.
BENCH_RECORD_RUNS = True
