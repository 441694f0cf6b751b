from __future__ import absolute_import

from .main import main
