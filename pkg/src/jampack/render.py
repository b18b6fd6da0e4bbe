"""Deterministic SVG rendering of disc configurations."""

from .configuration import Configuration
from .geometry import DEFAULT_TOL, Tolerances

_COLORS = {"jammed": "#4878a8", "movable": "#c04040", "rattler": "#d8a030"}


def _bounds(config: Configuration):
    if config.box is not None:
        return 0.0, 0.0, config.box[0], config.box[1]
    if config.n == 0:
        return 0.0, 0.0, 1.0, 1.0
    r = config.radius
    xs = config.centers[:, 0]
    ys = config.centers[:, 1]
    return (float(xs.min()) - r, float(ys.min()) - r,
            float(xs.max()) + r, float(ys.max()) + r)


def render_svg(config: Configuration, contacts: bool = False,
               color_verdicts: bool = False, width_px: float = 800.0,
               tol: Tolerances = DEFAULT_TOL) -> str:
    """SVG document with one circle per disc.

    Options add a contact-edge overlay and jamming color-coding.  The y
    axis is flipped so the drawing matches mathematical orientation.
    Output is byte-identical for identical input and options.
    """
    x0, y0, x1, y1 = _bounds(config)
    span_x = max(x1 - x0, 1e-300)
    span_y = max(y1 - y0, 1e-300)
    s = width_px / span_x
    height_px = span_y * s

    def px(x):
        return (x - x0) * s

    def py(y):
        return (y1 - y) * s

    lines = ['<svg xmlns="http://www.w3.org/2000/svg" width="%.2f" '
             'height="%.2f" viewBox="0 0 %.2f %.2f">'
             % (width_px, height_px, width_px, height_px)]
    if config.box is not None:
        lines.append('<rect x="0" y="0" width="%.2f" height="%.2f" '
                     'fill="none" stroke="black" stroke-width="1"/>'
                     % (width_px, height_px))

    fills = ["#cccccc"] * config.n
    graph = None
    if contacts or color_verdicts:
        from .verifier import contact_graph, verify_stable
        graph = contact_graph(config, tol)
        if color_verdicts:
            report = verify_stable(config, tol)
            fills = [_COLORS[v.status] for v in report.verdicts]

    for i, (x, y) in enumerate(config.centers):
        lines.append('<circle cx="%.4f" cy="%.4f" r="%.4f" fill="%s" '
                     'stroke="black" stroke-width="0.5"/>'
                     % (px(x), py(y), config.radius * s, fills[i]))
    if contacts and graph is not None:
        for i, j in graph.pairs:
            xi, yi = config.centers[i]
            xj, yj = config.centers[j]
            lines.append('<line x1="%.4f" y1="%.4f" x2="%.4f" y2="%.4f" '
                         'stroke="#208020" stroke-width="0.8"/>'
                         % (px(xi), py(yi), px(xj), py(yj)))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
