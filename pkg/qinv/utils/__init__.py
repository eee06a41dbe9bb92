from qinv.utils.rendering import render, render_csv, render_json, render_plain

__all__ = (
    "render",
    "render_csv",
    "render_json",
    "render_plain",
)
