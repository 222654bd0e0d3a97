"""Utilities subpackage."""