"""CSS for the code inspector.

Matrix view on the left, decoder panel on the right (hidden until ``w``),
log and the ``:`` prompt docked at the bottom.
"""

ACCENT = "#5fd7ff"
MARK = "#ffd75f"
FRAME = "#3a3a4a"
PANEL_BG = "#16161e"

APP_CSS = f"""
Screen {{
    background: #0e0e12;
    layers: base modal;
}}

#header-bar, #crumb-bar {{
    dock: top;
    height: 1;
    padding: 0 1;
}}

#header-bar {{
    background: #1c2b4a;
    color: #f0f0f0;
}}

#crumb-bar {{
    background: {PANEL_BG};
    color: #9a9aa8;
}}

#main-container {{
    height: 1fr;
}}

#stage-panel {{
    width: 3fr;
    border: round {FRAME};
    border-title-color: {ACCENT};
}}

#stage-table {{
    height: 1fr;
}}

#stage-table > .datatable--header {{
    background: {PANEL_BG};
    color: {MARK};
    text-style: bold;
}}

#stage-table > .datatable--cursor {{
    background: {ACCENT} 60%;
    color: #000000;
}}

#word-panel {{
    display: none;
    width: 2fr;
    border: round {FRAME};
    border-title-color: {ACCENT};
}}

#word-panel.visible {{
    display: block;
}}

#word-log, #command-log {{
    scrollbar-size: 1 1;
    padding: 0 1;
}}

#word-log {{
    height: 1fr;
}}

#word-input {{
    dock: bottom;
    height: 3;
    border: tall {FRAME};
}}

#word-input:focus {{
    border: tall {ACCENT};
}}

#command-log {{
    dock: bottom;
    height: 8;
    border: round {FRAME};
    border-title-color: {ACCENT};
}}

#command-bar {{
    display: none;
    dock: bottom;
    height: 1;
    border: none;
    padding: 0 1;
    background: {PANEL_BG};
}}

#command-bar.visible {{
    display: block;
}}

#command-bar:focus {{
    border: none;
}}

#help-modal {{
    display: none;
    layer: modal;
    align: center middle;
    width: 60;
    height: 26;
    padding: 1 2;
    border: double {ACCENT};
    background: {PANEL_BG};
}}

#help-modal.visible {{
    display: block;
}}
"""
