"""
Django settings for app project.

Generated by 'django-admin startproject' using Django 5.1.

For more information on this file, see
https://docs.djangoproject.com/en/5.1/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Quick-start development settings - unsuitable for production
# See https://docs.djangoproject.com/en/5.1/howto/deployment/checklist/

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'SECRET_KEY',
    'django-insecure-0c4l3k!v7p#n2m$cq@d8x^w5s(r1+h6t-ssep-lattice'
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = bool(int(os.environ.get('DEBUG', 1)))

ALLOWED_HOSTS = [
    host for host in os.environ.get('ALLOWED_HOSTS', '').split(',') if host
]


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    # third party apps
    'rest_framework',
    'drf_spectacular',
    # local apps
    'core',
    'partitions',
    'graphs',
    'cumulants',
    'bernoulli',
    'scaling',
    'freeprob',
    'ssep',
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

ROOT_URLCONF = 'app.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'app.wsgi.application'


# Database
# https://docs.djangoproject.com/en/5.1/ref/settings/#databases
# Only verification runs are persisted; SQLite is enough.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.environ.get('DB_NAME', BASE_DIR / 'db.sqlite3'),
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.1/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (CSS, JavaScript, Images)
# https://docs.djangoproject.com/en/5.1/howto/static-files/

STATIC_URL = '/static/static/'
STATIC_ROOT = os.environ.get('STATIC_ROOT', BASE_DIR / 'static')

# Default primary key field type
# https://docs.djangoproject.com/en/5.1/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'DEFAULT_SCHEMA_CLASS': 'drf_spectacular.openapi.AutoSchema',
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'UNAUTHENTICATED_USER': None,
    'EXCEPTION_HANDLER': 'core.views.computation_exception_handler',
}

SPECTACULAR_SETTINGS = {
    'TITLE': 'SSEP lattice API',
    'DESCRIPTION': (
        'Partition lattices, free cumulants and the SSEP large '
        'deviation functional'
    ),
    'COMPONENT_SPLIT_REQUEST': True,
}


# Numerical defaults
# Every entry can be overridden with an SSEP_<NAME> environment variable.

def _env_float(name, default):
    return float(os.environ.get(f'SSEP_{name}', default))


def _env_int(name, default):
    return int(os.environ.get(f'SSEP_{name}', default))


NUMERICS = {
    'GRID_SIZE': _env_int('GRID_SIZE', 256),
    'FIXED_POINT_TOLERANCE': _env_float('FIXED_POINT_TOLERANCE', 1e-10),
    'MAX_ITERATIONS': _env_int('MAX_ITERATIONS', 10000),
    'DAMPING': _env_float('DAMPING', 0.5),
    'STATIONARITY_TOLERANCE': _env_float('STATIONARITY_TOLERANCE', 1e-6),
    'IDENTITY_TOLERANCE': _env_float('IDENTITY_TOLERANCE', 1e-6),
    'N_MAX': _env_int('N_MAX', 6),
    'SHOOTING_BRACKET': (
        _env_float('SHOOTING_LOWER', 1e-6),
        _env_float('SHOOTING_UPPER', 1e3),
    ),
    'LEGENDRE_STARTS': _env_int('LEGENDRE_STARTS', 5),
    'SEED': _env_int('SEED', 7),
    'OUTPUT_FORMAT': os.environ.get('SSEP_OUTPUT_FORMAT', 'json'),
}


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.environ.get('SSEP_LOG_LEVEL', 'WARNING').upper(),
    },
}
