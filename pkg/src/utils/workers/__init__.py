from .runtime import * # noqa
