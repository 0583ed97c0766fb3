"""
rich consoles: stdout carries proofs, stderr carries diagnostics.

FREX_COLOR=0 disables ANSI colour, FREX_COLOR=1 forces it; unset leaves the
decision to rich's terminal detection.
"""

import os

from rich.console import Console


def color_setting():
    value = os.getenv('FREX_COLOR')
    if value == '0':
        return False
    if value == '1':
        return True
    return None


def get_console(stderr=False, file=None):
    color = color_setting()
    kwargs = {'stderr': stderr, 'file': file, 'soft_wrap': True}
    if color is False:
        kwargs['no_color'] = True
        kwargs['color_system'] = None
    elif color is True:
        kwargs['force_terminal'] = True
    return Console(**kwargs)
