"""Numeric ground truth: certified critical-point data of explicit deformations."""

from __future__ import annotations
