#!/usr/bin/env python3
"""Regenerate the bundled fixture trees under fixtures/.

Each corpus screen mimics a raw accessibility dump from one desktop
application and carries the usual junk: raw geometry columns, a modal
layer over live content, the same control listed under several roles,
off-screen or collapsed nodes, and long text bodies.

Output is deterministic (fixed seeds), so rerunning leaves git clean.
"""

import argparse
import random
from pathlib import Path

W, H = 1920, 1080

LOREM = (
    "The committee reviewed the quarterly figures in detail and decided that the "
    "regional offices should publish their schedules earlier next year. Travel "
    "requests, including every flight and hotel booking, now go through the shared "
    "portal, and receipts must be attached within ten working days. Teams that "
    "missed the last deadline were asked to document the reasons and propose a "
    "realistic plan. The finance group will circulate an updated template with "
    "clearer instructions about currency conversion, per diem limits and approval "
    "chains, and questions can be raised during the Thursday office hours."
)


class Tree:
    def __init__(self):
        self.rows = []

    def add(self, tag, name="", text="", cls="", desc="", x=0, y=0, w=0, h=0):
        def clean(s):
            return s.replace("\t", " ").replace("\n", " ")

        meta = clean(cls) + ("|" + clean(desc) if desc else "")
        self.rows.append(
            "\t".join([tag, clean(name), clean(text), meta, str(x), str(y), str(w), str(h)])
        )

    def dump(self):
        return "screen %d %d\n" % (W, H) + "\n".join(self.rows) + "\n"


def button(t, name, x, y, w=32, h=32, cls="GtkButton", desc="", twin=None):
    """Push-button, optionally with the toolkit's duplicate label/icon twin."""
    t.add("push-button", name, "", cls, desc or name, x, y, w, h)
    if twin:
        t.add(twin, name, "", "GtkLabel" if twin == "label" else "GtkImage", "", x + 2, y + 3, w - 4, h - 6)


def hidden_menu(t, items, cls="GtkMenuItem"):
    """Items of a closed menu: still listed, parked off screen or collapsed."""
    for i, name in enumerate(items):
        if i % 3 == 0:
            t.add("menu-item", name, "", cls, "", 0, 0, 0, 0)
        else:
            t.add("menu-item", name, "", cls, "", -2000, -2000 + 24 * i, 180, 24)


def fillers(t, rng, n):
    for _ in range(n):
        kind = rng.choice(["filler", "redundant-object", "panel"])
        if kind == "panel":
            t.add("panel", "", "", "GtkBox", "", 0, 0, 0, 0)
        else:
            t.add(kind, "", "", "GtkBox", "", rng.randint(0, W - 100), rng.randint(0, H - 100),
                  rng.randint(10, 300), rng.randint(10, 300))


def long_text(rng, n):
    words = LOREM.split()
    out = []
    while len(" ".join(out)) < n:
        out.append(words[rng.randrange(len(words))])
    return " ".join(out)


# ---------------------------------------------------------------------------


def chrome(rng, cookie=False):
    t = Tree()
    fillers(t, rng, 8)
    t.add("frame", "Flight deals - Google Chrome", "", "BrowserFrame", "", 0, 0, W, H)
    tabs = ["Flight deals", "Weather forecast", "Hotel reviews"]
    for i, name in enumerate(tabs):
        x = 10 + i * 240
        t.add("page-tab", name, "", "Tab", name, x, 8, 230, 34)
        t.add("push-button", "Close", "", "TabCloseButton", "Close tab", x + 200, 16, 20, 20)
    button(t, "New Tab", 740, 12, 28, 28, cls="NewTabButton")
    button(t, "Search tabs", 1800, 12, 28, 28, cls="TabSearchButton")
    for i, name in enumerate(["Back", "Forward", "Reload"]):
        button(t, name, 10 + 40 * i, 62, 32, 32, cls="ToolbarButton", twin="image")
    t.add("entry", "Address and search bar", "https://travel.example.com/deals/europe?from=home",
          "OmniboxViewViews", "Address and search bar", 140, 60, 1500, 36)
    t.add("push-button", "View site information", "", "LocationIconView", "", 146, 66, 24, 24)
    button(t, "Bookmark this tab", 1610, 64, 28, 28, cls="StarView")
    button(t, "Extensions", 1700, 62, 32, 32, cls="ExtensionsToolbarButton", twin="image")
    button(t, "Customize and control Google Chrome", 1860, 62, 32, 32, cls="BrowserAppMenuButton")
    for i, name in enumerate(["Work mail", "Calendar", "Expenses", "Travel portal", "News"]):
        t.add("push-button", name, "", "BookmarkButton", "", 10 + 130 * i, 118, 120, 26)
        t.add("label", name, "", "Label", "", 30 + 130 * i, 121, 95, 20)
    hidden_menu(t, ["New window", "New incognito window", "History", "Downloads", "Bookmarks",
                    "Zoom", "Print", "Cast", "Find", "More tools", "Help", "Exit"])

    # Page content
    t.add("document-web", "Flight deals", "", "RenderWidgetHostViewAura", "", 0, 150, W, H - 150)
    t.add("heading", "Cheap flights to Europe", "", "", "", 200, 190, 800, 48)
    nav = ["Flights", "Hotels", "Car rental", "Deals", "Sign in"]
    for i, name in enumerate(nav):
        t.add("link", name, "", "", "", 1100 + 140 * i, 200, 120, 30)
        t.add("static", name, "", "", "", 1105 + 140 * i, 204, 110, 24)
    t.add("paragraph", "", long_text(rng, 700), "", "", 200, 260, 1400, 120)
    t.add("entry", "From", "Berlin", "", "", 200, 400, 300, 40)
    t.add("entry", "To", "", "", "", 520, 400, 300, 40)
    t.add("combo-box", "Passengers", "1 adult", "", "", 840, 400, 200, 40)
    t.add("push-button", "Search flights", "", "", "", 1060, 400, 180, 40)
    t.add("static", "Search flights", "", "", "", 1070, 406, 160, 28)
    for i in range(8):
        y = 480 + i * 70
        city = ["Paris", "Rome", "Lisbon", "Vienna", "Prague", "Madrid", "Oslo", "Athens"][i]
        price = 49 + 17 * i
        t.add("link", "Berlin to %s from %d EUR" % (city, price), "", "", "", 200, y, 600, 30)
        t.add("static", "Berlin to %s from %d EUR" % (city, price), "", "", "", 204, y + 2, 590, 26)
        t.add("image", "%s skyline" % city, "", "", "", 820, y - 5, 80, 40)
        t.add("paragraph", "", long_text(rng, 260), "", "", 920, y, 800, 50)
    # Below the fold: listed by the tree but not visible.
    for i in range(25):
        y = 1100 + i * 60
        t.add("link", "More destination %d" % (i + 1), "", "", "", 200, y, 400, 30)
        t.add("paragraph", "", long_text(rng, 200), "", "", 620, y, 900, 50)
    for name in ["About", "Careers", "Press", "Help centre"]:
        t.add("link", name, "", "", "", 200, 2900, 100, 20)

    if cookie:
        x0 = 660
        t.add("dialog", "Cookie consent", "", "ConsentDialog", "", x0, 300, 600, 520)
        t.add("heading", "Your privacy choices", "", "", "", x0 + 40, 320, 520, 36)
        t.add("paragraph", "", "We and our partners use cookies to measure traffic and personalise "
              "offers. You can accept all cookies, reject optional ones or choose per purpose. "
              "See our privacy policy for details on retention and third parties.",
              "", "", x0 + 40, 370, 520, 70)
        for i, name in enumerate(["Strictly necessary cookies", "Analytics cookies",
                                  "Advertising cookies"]):
            t.add("check-box", name, "", "", "", x0 + 40, 450 + 45 * i, 520, 30)
            t.add("label", name, "", "", "", x0 + 70, 452 + 45 * i, 300, 26)
        t.add("link", "Privacy policy", "", "", "", x0 + 40, 590, 160, 24)
        for i, name in enumerate(["Accept all", "Reject all", "Save settings"]):
            t.add("push-button", name, "", "", "", x0 + 200, 630 + 50 * i, 200, 40)
            t.add("static", name, "", "", "", x0 + 210, 636 + 50 * i, 180, 28)
        t.add("push-button", "×", "", "", "Close", x0 + 560, 310, 30, 30)
    return t


def vscode(rng):
    t = Tree()
    fillers(t, rng, 6)
    t.add("frame", "report.py - project - Visual Studio Code", "", "", "", 0, 0, W, H)
    for i, name in enumerate(["Files", "Terminal", "Browser", "Settings"]):
        t.add("push-button", name, "", "LauncherIcon", "", 10, 120 + 70 * i, 60, 60)
    for i, name in enumerate(["File", "Edit", "Selection", "View", "Go", "Run", "Terminal", "Help"]):
        t.add("menu", name, "", "MenubarMenu", "", 130 + 60 * i, 36, 55, 26)
        t.add("label", name, "", "", "", 132 + 60 * i, 38, 50, 22)
    hidden_menu(t, ["New File", "Open Folder", "Save", "Save As", "Auto Save", "Preferences",
                    "Revert File", "Close Editor", "Exit", "Undo", "Redo", "Cut", "Copy", "Paste"])
    for i, name in enumerate(["Explorer", "Search", "Source Control", "Run and Debug", "Extensions"]):
        t.add("page-tab", name, "", "ActivityBarItem", name + " (Ctrl+Shift+%s)" % "EFGDX"[i],
              96, 100 + 48 * i, 48, 48)
        t.add("image", name, "", "Codicon", "", 108, 112 + 48 * i, 24, 24)
    t.add("push-button", "Accounts", "", "ActivityBarItem", "", 96, 960, 48, 48)
    t.add("heading", "EXPLORER", "", "", "", 150, 100, 200, 22)
    files = ["src", "report.py", "loader.py", "utils.py", "tests", "test_report.py",
             "README.md", "pyproject.toml", "requirements.txt", ".gitignore"]
    for i, name in enumerate(files):
        t.add("tree-item", name, "", "MonacoListRow", "", 150, 130 + 22 * i, 380, 22)
        t.add("label", name, "", "", "", 175, 132 + 22 * i, 200, 18)
    for i in range(30):  # collapsed folders
        t.add("tree-item", "module_%02d.py" % i, "", "MonacoListRow", "", 150, 0, 380, 0)
    t.add("heading", "OUTLINE", "", "", "", 150, 880, 200, 22)
    t.add("heading", "TIMELINE", "", "", "", 150, 910, 200, 22)
    for i, name in enumerate(["report.py", "loader.py", "README.md"]):
        t.add("page-tab", name, "", "TabLabel", "~/project/" + name, 560 + 170 * i, 100, 160, 34)
        t.add("push-button", "Close (Ctrl+W)", "", "TabCloseButton", "", 700 + 170 * i, 108, 18, 18)
    for i, crumb in enumerate(["project", "src", "report.py", "build_summary"]):
        t.add("link", crumb, "", "Breadcrumb", "", 560 + 110 * i, 140, 100, 22)
    code = [
        "import csv", "from pathlib import Path", "", "def build_summary(rows):",
        "    totals = {}", "    for row in rows:", "        key = row['region']",
        "        totals[key] = totals.get(key, 0) + float(row['amount'])",
        "    return totals", "", "def main():", "    rows = load_rows(Path('data.csv'))",
        "    summary = build_summary(rows)", "    for region, total in sorted(summary.items()):",
        "        print(f'{region}: {total:.2f}')", "", "if __name__ == '__main__':", "    main()",
    ]
    for i, line in enumerate(code):
        t.add("text", "", line, "ViewLine", "", 600, 170 + 22 * i, 1200, 22)
    for i in range(60):  # virtualised lines past the viewport
        t.add("text", "", "    # line %d" % (i + 40), "ViewLine", "", 600, 1100 + 22 * i, 1200, 22)
    t.add("text", "", long_text(rng, 900), "Minimap", "", 1820, 170, 80, 700)
    for i, name in enumerate(["main", "0 errors, 2 warnings", "Ln 4, Col 9", "Spaces: 4", "UTF-8",
                              "Python 3.11"]):
        t.add("push-button", name, "", "StatusbarItem", "", 150 + 220 * i, 1050, 200, 24)
        t.add("label", name, "", "", "", 152 + 220 * i, 1052, 190, 20)
    return t


def thunderbird(rng):
    t = Tree()
    fillers(t, rng, 6)
    for i, name in enumerate(["Mail", "Address Book", "Calendar", "Tasks", "Chat", "Spaces"]):
        button(t, name, 20, 80 + 60 * i, 48, 48, cls="SpacesButton", twin="image")
    for i, name in enumerate(["Get Messages", "Write", "Chat", "Address Book", "Tag", "Quick Filter"]):
        button(t, name, 140 + 130 * i, 20, 120, 36, cls="ToolbarButton", twin="label")
    t.add("entry", "Search messages", "", "", "", 1300, 20, 400, 36)
    hidden_menu(t, ["New", "Open", "Save as", "Print", "Offline", "Exit", "Undo", "Select All",
                    "Preferences", "Folder", "Message", "Tools"])
    folders = ["Inbox", "Drafts", "Sent", "Archives", "Junk", "Trash", "Travel", "Receipts"]
    for i, name in enumerate(folders):
        t.add("tree-item", name, "", "FolderTreeRow", "", 130, 130 + 30 * i, 250, 28)
        t.add("label", name, "", "", "", 160, 133 + 30 * i, 120, 22)
    for name in ["Subject", "Correspondents", "Date"]:
        x = {"Subject": 420, "Correspondents": 700, "Date": 900}[name]
        t.add("column-header", name, "", "", "", x, 120, 180, 28)
    subjects = ["Flight confirmation LH 1234", "Team offsite agenda", "Invoice March",
                "Re: Hotel booking", "Weekly report", "Password reset", "Lunch on Friday?",
                "Conference badge", "Expense approval", "Newsletter"]
    for i, subj in enumerate(subjects):
        y = 160 + 30 * i
        t.add("table-cell", "", subj, "", "", 420, y, 270, 28)
        t.add("table-cell", "", ["Lufthansa", "Anna", "Billing", "Hotel Adler", "Ben"][i % 5], "", "", 700, y, 190, 28)
        t.add("table-cell", "", "2024-03-%02d" % (10 + i), "", "", 900, y, 120, 28)
    for i in range(40):  # rows below the scrolled viewport
        t.add("table-cell", "", "Older message %d" % i, "", "", 420, 1100 + 30 * i, 270, 28)
    t.add("heading", "Flight confirmation LH 1234", "", "", "", 1080, 130, 800, 36)
    for i, name in enumerate(["Reply", "Forward", "Archive", "Junk", "Delete"]):
        button(t, name, 1080 + 110 * i, 180, 100, 30, twin="label")
    t.add("static", "From: Lufthansa <noreply@example.com>", "", "", "", 1080, 220, 800, 22)
    for i in range(4):
        t.add("paragraph", "", long_text(rng, 520), "", "", 1080, 260 + 160 * i, 800, 150)
    t.add("static", "Unread: 3  Total: 120", "", "", "", 1700, 1052, 200, 22)
    return t


def gimp(rng):
    t = Tree()
    fillers(t, rng, 6)
    t.add("frame", "[photo] (imported)-1.0 (RGB color 8-bit gamma integer) - GNU Image Manipulation Program",
          "", "", "", 0, 0, W, H)
    for i, name in enumerate(["File", "Edit", "Select", "View", "Image", "Layer", "Colors", "Tools",
                              "Filters", "Windows", "Help"]):
        t.add("menu", name, "", "GtkMenuItem", "", 10 + 70 * i, 30, 65, 26)
        t.add("label", name, "", "GtkAccelLabel", "", 12 + 70 * i, 32, 60, 22)
    hidden_menu(t, ["New", "Open", "Open as Layers", "Export As", "Close All", "Quit", "Undo",
                    "Redo", "Cut", "Copy", "Paste", "Preferences", "Keyboard Shortcuts",
                    "Scale Image", "Canvas Size", "Flatten Image", "Curves", "Levels"])
    tools = ["Move", "Rectangle Select", "Free Select", "Fuzzy Select", "Crop", "Unified Transform",
             "Warp Transform", "Paintbrush", "Eraser", "Bucket Fill", "Gradient", "Text", "Clone",
             "Smudge", "Dodge / Burn", "Paths", "Color Picker", "Zoom"]
    t.add("panel", "Toolbox", "", "GimpToolbox", "", 0, 80, 400, 900)
    for i, name in enumerate(tools):
        x = 10 + 44 * (i % 6)
        y = 100 + 44 * (i // 6)
        t.add("toggle-button", name, "", "GimpToolButton", name + " tool", x, y, 40, 40)
        t.add("image", name, "", "GtkImage", "", x + 4, y + 4, 32, 32)
    t.add("heading", "Tool Options", "", "", "", 10, 260, 300, 24)
    for i, (name, val) in enumerate([("Mode", "Normal"), ("Opacity", "100.0"), ("Size", "51.00"),
                                     ("Aspect Ratio", "0.00"), ("Angle", "0.00"), ("Spacing", "10.0")]):
        t.add("label", name, "", "", "", 10, 300 + 40 * i, 120, 30)
        t.add("spin-button", name, val, "GimpSpinScale", "", 140, 300 + 40 * i, 250, 30)
    t.add("drawing-area", "", "", "GimpCanvas", "", 420, 80, 1080, 900)
    t.add("image", "photo.jpg", "", "", "", 500, 150, 900, 700)
    for i, name in enumerate(["Layers", "Channels", "Paths", "Undo History", "Brushes", "Patterns"]):
        t.add("page-tab", name, "", "GimpDockbook", "", 1520 + 65 * (i % 6), 90, 60, 30)
        t.add("image", name, "", "", "", 1530 + 65 * (i % 6), 95, 20, 20)
    for i, name in enumerate(["Background", "Shadow", "Text layer"]):
        t.add("table-cell", name, "", "GimpLayerTreeView", "", 1540, 140 + 40 * i, 360, 36)
        t.add("check-box", "Visible", "", "", "", 1520, 145 + 40 * i, 20, 20)
    for i in range(24):
        t.add("list-item", "Brush %02d" % i, "", "", "", 1520 + 60 * (i % 6), 600 + 60 * (i // 6), 56, 56)
        t.add("image", "Brush %02d" % i, "", "", "", 1524 + 60 * (i % 6), 604 + 60 * (i // 6), 48, 48)
    t.add("static", "px", "", "", "", 10, 1040, 30, 22)
    t.add("static", "66.7%", "", "", "", 60, 1040, 60, 22)
    t.add("static", "photo.jpg (24.3 MB)", "", "", "", 140, 1040, 300, 22)
    return t


def col_name(c):
    s = ""
    c += 1
    while c:
        c, r = divmod(c - 1, 26)
        s = chr(65 + r) + s
    return s


def calc(rng):
    t = Tree()
    fillers(t, rng, 5)
    t.add("frame", "budget.ods - LibreOffice Calc", "", "", "", 0, 0, W, H)
    for i, name in enumerate(["File", "Edit", "View", "Insert", "Format", "Styles", "Sheet", "Data",
                              "Tools", "Window", "Help"]):
        t.add("menu", name, "", "MenuItem", "", 10 + 70 * i, 30, 65, 24)
    hidden_menu(t, ["New", "Open", "Recent Documents", "Close", "Save", "Save As", "Export",
                    "Print", "Exit LibreOffice", "Undo", "Redo", "Paste Special", "Find & Replace"])
    tb = ["Save", "Undo", "Redo", "Cut", "Copy", "Paste", "Bold", "Italic", "Underline",
          "Sort Ascending", "Sort Descending", "AutoFilter", "Insert Chart", "Insert or Edit Pivot Table"]
    for i, name in enumerate(tb):
        button(t, name, 10 + 40 * i, 66, 34, 34, cls="ToolbarButton", twin="image")
    t.add("combo-box", "Name Box", "C4", "", "", 10, 140, 120, 30)
    button(t, "Function Wizard", 140, 140, 30, 30)
    t.add("entry", "Input line", "=SUM(C2:C9)", "", "", 220, 140, 1600, 30)
    values = {
        (0, 0): "Category", (0, 1): "Q1", (0, 2): "Q2", (0, 3): "Total",
    }
    cats = ["Rent", "Salaries", "Travel", "Software", "Hardware", "Marketing", "Training", "Misc"]
    for r, cat in enumerate(cats, start=1):
        q1 = rng.randint(500, 9000)
        q2 = rng.randint(500, 9000)
        values[(r, 0)] = cat
        values[(r, 1)] = str(q1)
        values[(r, 2)] = str(q2)
        values[(r, 3)] = str(q1 + q2)
    values[(9, 0)] = "Sum"
    values[(9, 3)] = "84210"
    for r in range(35):
        for c in range(20):
            x = 60 + 90 * c
            y = 240 + 22 * r
            name = "%s%d" % (col_name(c), r + 1)
            t.add("table-cell", name, values.get((r, c), ""), "ScCell", "", x, y, 90, 22)
    for c in range(20):
        t.add("static", col_name(c), "", "ColumnHeader", "", 60 + 90 * c, 215, 90, 22)
    for i, name in enumerate(["Summary", "Details", "Archive"]):
        t.add("page-tab", name, "", "SheetTab", "", 60 + 120 * i, 1018, 110, 24)
    t.add("static", "Sheet 1 of 3", "", "", "", 10, 1050, 150, 24)
    t.add("static", "Default", "", "", "", 300, 1050, 100, 24)
    t.add("static", "Sum=84210", "", "", "", 1500, 1050, 200, 24)
    return t


def impress(rng):
    t = Tree()
    fillers(t, rng, 5)
    t.add("frame", "pitch.odp - LibreOffice Impress", "", "", "", 0, 0, W, H)
    for i, name in enumerate(["File", "Edit", "View", "Insert", "Format", "Slide", "Slide Show",
                              "Tools", "Window", "Help"]):
        t.add("menu", name, "", "MenuItem", "", 10 + 80 * i, 30, 75, 24)
    hidden_menu(t, ["New Slide", "Duplicate Slide", "Delete Slide", "Slide Layout", "Start from First Slide",
                    "Start from Current Slide", "Presentation", "Master Slides", "Export as PDF"])
    for i, name in enumerate(["Save", "Undo", "Redo", "Start from First Slide", "Insert Text Box",
                              "Insert Image", "Insert Table", "Insert Chart", "Shapes"]):
        button(t, name, 10 + 42 * i, 66, 36, 36, cls="ToolbarButton", twin="image")
    t.add("heading", "Slides Pane", "", "", "", 10, 140, 300, 24)
    for i in range(8):
        t.add("list-item", "Slide %d" % (i + 1), "", "SlideSorter", "", 20, 180 + 150 * i, 300, 140)
        t.add("image", "Slide %d" % (i + 1), "", "", "", 30, 185 + 150 * i, 280, 130)
    t.add("text", "", "Quarterly results", "TitleText", "", 500, 200, 900, 80)
    t.add("paragraph", "", long_text(rng, 600), "OutlineText", "", 500, 320, 900, 400)
    t.add("text", "", "Click to add Notes", "NotesText", "", 500, 800, 900, 80)
    t.add("heading", "Properties", "", "", "", 1560, 140, 300, 24)
    for i, name in enumerate(["Slide", "Layouts", "Master Slides", "Animation", "Slide Transition"]):
        t.add("push-button", name, "", "TabBarButton", "", 1880, 180 + 50 * i, 36, 40)
        t.add("static", name, "", "", "", 1560, 180 + 50 * i, 300, 40)
    for i in range(12):
        t.add("list-item", "Layout %d" % (i + 1), "", "ValueSet", "", 1560 + 100 * (i % 3), 480 + 90 * (i // 3), 90, 80)
    t.add("static", "Slide 1 of 8", "", "", "", 10, 1050, 150, 24)
    t.add("static", "English (USA)", "", "", "", 800, 1050, 150, 24)
    return t


def writer(rng):
    t = Tree()
    fillers(t, rng, 5)
    t.add("frame", "notes.odt - LibreOffice Writer", "", "", "", 0, 0, W, H)
    for i, name in enumerate(["File", "Edit", "View", "Insert", "Format", "Styles", "Table",
                              "Form", "Tools", "Window", "Help"]):
        t.add("menu", name, "", "MenuItem", "", 10 + 70 * i, 30, 65, 24)
    hidden_menu(t, ["New", "Open", "Save", "Export", "Print", "Undo", "Redo", "Word Count",
                    "Spelling", "AutoCorrect", "Options"])
    t.add("combo-box", "Paragraph Styles", "Default Paragraph Style", "", "", 10, 110, 220, 30)
    t.add("combo-box", "Font Name", "Liberation Serif", "", "", 240, 110, 200, 30)
    t.add("combo-box", "Font Size", "12 pt", "", "", 450, 110, 80, 30)
    for i, name in enumerate(["Bold", "Italic", "Underline", "Align Left", "Align Center",
                              "Align Right", "Justified", "Toggle Unordered List"]):
        button(t, name, 550 + 40 * i, 110, 34, 30, cls="ToolbarButton", twin="image")
    paragraphs = 9
    for i in range(paragraphs):
        y = 300 + 150 * i
        t.add("paragraph", "", long_text(rng, 650), "SwParagraph", "", 400, y, 1100, 140)
    t.add("heading", "Travel policy notes", "", "", "", 400, 230, 1100, 50)
    for i, name in enumerate(["Properties", "Page", "Style Inspector", "Gallery", "Navigator"]):
        t.add("push-button", name, "", "TabBarButton", "", 1880, 200 + 50 * i, 36, 40)
        t.add("image", name, "", "", "", 1884, 204 + 50 * i, 28, 28)
    t.add("static", "Page 1 of 3", "", "", "", 10, 1050, 150, 24)
    t.add("static", "Word and character count: 1,204 words, 7,388 characters", "", "", "", 200, 1050, 500, 24)
    t.add("static", "Page Style: Default Page Style", "", "", "", 750, 1050, 300, 24)
    return t


def vlc(rng):
    t = Tree()
    fillers(t, rng, 5)
    t.add("frame", "lecture.mp4 - VLC media player", "", "", "", 0, 0, W, H)
    for i, name in enumerate(["Media", "Playback", "Audio", "Video", "Subtitle", "Tools", "View", "Help"]):
        t.add("menu", name, "", "QMenuBar", "", 10 + 80 * i, 30, 75, 24)
    hidden_menu(t, ["Open File", "Open Folder", "Open Network Stream", "Quit", "Speed", "Jump Forward",
                    "Jump Backward", "Add Subtitle File", "Preferences", "Effects and Filters"])
    t.add("push-button", "Toggle playlist", "", "", "", 1800, 150, 40, 40)
    t.add("drawing-area", "Video", "", "VideoWidget", "", 0, 220, 1400, 760)
    t.add("heading", "Playlist", "", "", "", 1420, 230, 300, 24)
    for i in range(14):
        name = "Lecture %02d - Linear algebra.mp4" % (i + 1)
        t.add("list-item", name, "", "PLView", "", 1420, 270 + 36 * i, 480, 32)
        t.add("static", name, "", "", "", 1425, 272 + 36 * i, 400, 28)
        t.add("static", "00:%02d:00" % (40 + i), "", "", "", 1830, 272 + 36 * i, 70, 28)
    for i in range(30):
        t.add("list-item", "Archive %02d.mp4" % i, "", "PLView", "", 1420, 1100 + 36 * i, 480, 32)
    t.add("slider", "Position", "00:12:31", "SeekSlider", "", 10, 1000, 1700, 20)
    for i, name in enumerate(["Play", "Previous", "Stop", "Next", "Fullscreen", "Extended settings",
                              "Loop", "Random", "Mute"]):
        button(t, name, 10 + 44 * i, 1036, 38, 38, cls="QToolButton", twin="image")
    t.add("slider", "Volume", "80%", "SoundSlider", "", 1700, 1040, 200, 30)
    return t


def os_desktop(rng):
    t = Tree()
    fillers(t, rng, 12)
    t.add("desktop-frame", "Desktop", "", "", "", 0, 0, W, H)
    t.add("push-button", "Activities", "", "", "", 10, 4, 100, 30)
    t.add("static", "Activities", "", "", "", 14, 8, 90, 22)
    t.add("static", "Mar 14  09:41", "", "", "", 900, 6, 140, 24)
    t.add("push-button", "System menu", "", "", "", 1800, 4, 100, 30)
    for i, name in enumerate(["Files", "Firefox", "Terminal", "Text Editor", "Settings", "Software",
                              "Help", "Show Applications"]):
        t.add("push-button", name, "", "DashItem", "", 10, 80 + 90 * i, 70, 70)
        t.add("image", name, "", "", "", 20, 90 + 90 * i, 50, 50)
        t.add("label", name, "", "", "", 14, 152 + 90 * i, 62, 16)
    for i, name in enumerate(["Home", "Trash", "report.pdf", "photos"]):
        t.add("icon", name, "", "DesktopIcon", "", 1780, 80 + 110 * i, 100, 100)
        t.add("label", name, "", "", "", 1785, 160 + 110 * i, 90, 20)
    # A file manager window
    x0, y0 = 500, 200
    t.add("frame", "Files", "", "", "", x0, y0, 900, 600)
    t.add("push-button", "Minimize", "", "", "", x0 + 800, y0 + 10, 24, 24)
    t.add("push-button", "Close", "", "", "", x0 + 850, y0 + 10, 24, 24)
    t.add("static", "Home", "", "", "", x0 + 400, y0 + 12, 100, 22)
    for i, name in enumerate(["Recent", "Starred", "Home", "Documents", "Downloads", "Music",
                              "Pictures", "Videos", "Trash"]):
        t.add("list-item", name, "", "", "", x0 + 10, y0 + 60 + 45 * i, 180, 40)
        t.add("label", name, "", "", "", x0 + 40, y0 + 65 + 45 * i, 140, 30)
    for i, name in enumerate(["Desktop", "Documents", "Downloads", "Music", "Pictures", "Public",
                              "Templates", "Videos"]):
        x = x0 + 220 + 160 * (i % 4)
        y = y0 + 70 + 150 * (i // 4)
        t.add("icon", name, "", "", "", x, y, 40, 40)
        t.add("label", name, "", "", "", x - 10, y + 45, 120, 20)
    for i in range(40):
        t.add("table-cell", "", "", "", "", 0, 0, 0, 0)
    return t


# ---------------------------------------------------------------------------


def dialog_pair():
    """A writer screen, then the same screen with a 6-element dialog on top."""
    t = Tree()
    for i, name in enumerate(["File", "Edit", "View", "Insert", "Format", "Tools"]):
        t.add("menu", name, "", "MenuItem", "", 10 + 70 * i, 30, 65, 24)
    t.add("combo-box", "Paragraph Styles", "Default Paragraph Style", "", "", 10, 110, 220, 30)
    for i, name in enumerate(["Bold", "Italic", "Underline"]):
        t.add("push-button", name, "", "", "", 550 + 40 * i, 110, 34, 30)
    for i in range(8):
        t.add("paragraph", "", "Paragraph %d of the travel policy draft." % (i + 1), "", "",
              400, 300 + 80 * i, 1100, 60)
    t.add("static", "Page 1 of 3", "", "", "", 10, 1050, 150, 24)
    prev = t.dump()
    x0, y0 = 710, 390
    t.add("dialog", "Save Document?", "", "", "", x0, y0, 500, 300)
    t.add("label", "Save changes to document \"notes\" before closing?", "", "", "", x0 + 20, y0 + 40, 460, 40)
    t.add("check-box", "Do not ask again", "", "", "", x0 + 20, y0 + 110, 300, 30)
    t.add("push-button", "Save", "", "", "", x0 + 20, y0 + 230, 140, 40)
    t.add("push-button", "Don't Save", "", "", "", x0 + 180, y0 + 230, 140, 40)
    t.add("push-button", "Cancel", "", "", "", x0 + 340, y0 + 230, 140, 40)
    return prev, t.dump()


CORPUS = [
    ("calc", calc, "Compute the total of the Travel row in the budget sheet"),
    ("chrome", lambda r: chrome(r), "Open the cheapest flight deal to Paris"),
    ("chrome_cookie", lambda r: chrome(r, cookie=True), "Reject the optional cookies and search flights to Rome"),
    ("gimp", gimp, "Set the paintbrush opacity to 50 and select the Background layer"),
    ("impress", impress, "Change the layout of slide 3 to Title and Content"),
    ("os", os_desktop, "Open the Documents folder in the file manager"),
    ("thunderbird", thunderbird, "Reply to the flight confirmation email from Lufthansa"),
    ("vlc", vlc, "Play lecture 05 from the playlist with volume muted"),
    ("vscode", vscode, "Rename build_summary to summarize_rows in report.py"),
    ("writer", writer, "Make the heading about travel policy bold"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    corpus = out / "corpus"
    corpus.mkdir(parents=True, exist_ok=True)
    for seed, (name, build, instruction) in enumerate(CORPUS):
        tree = build(random.Random(1000 + seed))
        (corpus / (name + ".tree")).write_text(tree.dump(), encoding="utf-8")
        (corpus / (name + ".instruction.txt")).write_text(instruction + "\n", encoding="utf-8")
    dialog = out / "dialog"
    dialog.mkdir(parents=True, exist_ok=True)
    prev, curr = dialog_pair()
    (dialog / "prev.tree").write_text(prev, encoding="utf-8")
    (dialog / "curr.tree").write_text(curr, encoding="utf-8")


if __name__ == "__main__":
    main()
