#include "a11yc/profiles.hpp"

namespace a11yc {

// Percent thresholds bind to screen width (x) or height (y) at the element
// center. Rules are first-match; each list ends with its catch-all region.
const char* const kBuiltinProfilesJson = R"json(
{
  "chrome": {
    "detect": {
      "anchors": ["new tab", "reload", "address and search bar", "bookmarks",
                  "google chrome", "customize and control google chrome",
                  "search tabs", "view site information"]
    },
    "rules": [
      {"region": "BROWSER_TABS", "kind": "static", "when": ["y < 150px"],
       "anchors": ["new tab", "close"], "anchor_row_px": 20},
      {"region": "ADDRESS_BAR", "kind": "static", "when": ["y < 110px"]},
      {"region": "BOOKMARK_BAR", "kind": "static", "when": ["y > 110px", "y < 150px"]},
      {"region": "PAGE_CONTENT", "kind": "dynamic"}
    ]
  },
  "vscode": {
    "detect": {
      "anchors": ["explorer", "run and debug", "extensions", "source control",
                  "visual studio code", "outline", "timeline", "accounts"]
    },
    "rules": [
      {"region": "APP_LAUNCHER", "kind": "static", "when": ["x <= 5%"]},
      {"region": "MENUBAR", "kind": "static", "when": ["y <= 12%"]},
      {"region": "STATUSBAR", "kind": "static", "when": ["y >= 96%"]},
      {"region": "ACTIVITY_BAR", "kind": "static", "when": ["x >= 2%", "x <= 8%"]},
      {"region": "SIDE_BAR", "kind": "dynamic", "when": ["x <= 30%"]},
      {"region": "TAB_BAR", "kind": "static", "when": ["y >= 7%", "y <= 16%"]},
      {"region": "BREADCRUMB", "kind": "static", "when": ["y >= 10%", "y <= 18%"]},
      {"region": "CONTENT", "kind": "dynamic"}
    ]
  },
  "thunderbird": {
    "detect": {
      "anchors": ["spaces", "get messages", "write", "inbox", "thunderbird",
                  "address book", "quick filter", "junk"]
    },
    "rules": [
      {"region": "SPACES_BAR", "kind": "static", "when": ["x < 115px"]},
      {"region": "TOOLBAR", "kind": "static", "when": ["y < 10%"]},
      {"region": "FOLDER_TREE", "kind": "dynamic", "when": ["x >= 115px", "x < 400px"]},
      {"region": "MESSAGE_LIST", "kind": "dynamic", "when": ["x < 55%"]},
      {"region": "PREVIEW", "kind": "dynamic", "when": ["x >= 55%"]},
      {"region": "CONTENT", "kind": "dynamic"}
    ],
    "views": [
      {
        "name": "settings",
        "trigger_anchors": ["settings", "preferences", "account settings", "general",
                            "composition", "privacy & security", "config editor"],
        "min_trigger": 3,
        "exclude_anchors": ["subject", "correspondents"],
        "rules": [
          {"region": "SPACES_BAR", "kind": "static", "when": ["x < 115px"]},
          {"region": "TOOLBAR", "kind": "static", "when": ["y < 10%"]},
          {"region": "SETTINGS_CATEGORY", "kind": "static", "when": ["x < 30%"]},
          {"region": "SETTINGS_MAIN", "kind": "dynamic"}
        ]
      }
    ]
  },
  "gimp": {
    "detect": {
      "anchors": ["gnu image manipulation program", "gimp", "toolbox", "layers",
                  "brushes", "tool options", "filters", "colors"]
    },
    "rules": [
      {"region": "MENUBAR", "kind": "static", "when": ["y < 10%"]},
      {"region": "STATUSBAR", "kind": "static", "when": ["y > 95%"]},
      {"region": "TOOLBOX", "kind": "static", "when": ["x < 22%"]},
      {"region": "DOCKS", "kind": "static", "when": ["x > 78%"]},
      {"region": "CANVAS", "kind": "dynamic"}
    ]
  },
  "calc": {
    "detect": {
      "anchors": ["libreoffice calc", "name box", "input line", "function wizard",
                  "insert or edit pivot table", "sheet 1 of"],
      "patterns": [{"regex": "^[A-Z]{1,3}[0-9]{1,7}$", "min_count": 5, "weight": 3}]
    },
    "rules": [
      {"region": "FORMULA_BAR", "kind": "static", "when": ["y > 9%", "y < 23%"]},
      {"region": "SHEET_TABS", "kind": "static", "when": ["y > 93%", "y < 96%"]},
      {"region": "MENUBAR", "kind": "static", "when": ["y < 10%"]},
      {"region": "TOOLBAR", "kind": "static", "when": ["y < 25%"]},
      {"region": "STATUSBAR", "kind": "static", "when": ["y > 95%"]},
      {"region": "SHEET", "kind": "dynamic"}
    ]
  },
  "impress": {
    "detect": {
      "anchors": ["libreoffice impress", "slides pane", "slide", "presentation",
                  "master slides", "layouts", "start from first slide"]
    },
    "rules": [
      {"region": "SLIDE_LIST", "kind": "dynamic", "when": ["x < 20%"]},
      {"region": "PROPERTIES", "kind": "dynamic", "when": ["x > 80%"]},
      {"region": "MENUBAR", "kind": "static", "when": ["y < 10%"]},
      {"region": "TOOLBAR", "kind": "static", "when": ["y < 25%"]},
      {"region": "STATUSBAR", "kind": "static", "when": ["y > 95%"]},
      {"region": "CONTENT", "kind": "dynamic"}
    ]
  },
  "writer": {
    "detect": {
      "anchors": ["libreoffice writer", "paragraph styles", "page style",
                  "default paragraph style", "word and character count", "text document"]
    },
    "rules": [
      {"region": "PROPERTIES", "kind": "dynamic", "when": ["x > 80%"]},
      {"region": "MENUBAR", "kind": "static", "when": ["y < 10%"]},
      {"region": "TOOLBAR", "kind": "static", "when": ["y < 25%"]},
      {"region": "STATUSBAR", "kind": "static", "when": ["y > 95%"]},
      {"region": "CONTENT", "kind": "dynamic"}
    ]
  },
  "vlc": {
    "detect": {
      "anchors": ["vlc media player", "playback", "subtitle", "playlist",
                  "toggle playlist", "media", "mute"]
    },
    "rules": [
      {"region": "MENUBAR", "kind": "static", "when": ["y < 10%"]},
      {"region": "TOP_BAR", "kind": "static", "when": ["y < 20%"]},
      {"region": "STATUSBAR", "kind": "static", "when": ["y > 92%"]},
      {"region": "CONTENT", "kind": "dynamic"}
    ]
  },
  "os": {
    "detect": {
      "anchors": ["activities", "show applications", "trash", "system menu", "desktop"]
    },
    "rules": [
      {"region": "TOP_BAR", "kind": "static", "when": ["y < 5%"]},
      {"region": "APP_LAUNCHER", "kind": "static", "when": ["x < 6%"]},
      {"region": "WINDOW", "kind": "dynamic", "detect_windows": true},
      {"region": "OS_POPUP", "kind": "dynamic",
       "tags": ["menu", "menu-item", "popup-menu", "dialog", "alert", "alertdialog"]},
      {"region": "DESKTOP_ICONS", "kind": "static", "tags": ["icon", "desktop-icon"]},
      {"region": "CONTENT", "kind": "dynamic"}
    ]
  },
  "generic": {
    "rules": [
      {"region": "CONTENT", "kind": "dynamic"}
    ]
  }
}
)json";

}  // namespace a11yc
