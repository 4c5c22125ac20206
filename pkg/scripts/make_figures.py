"""Write the three SVG figures into a directory (default: figures/)."""

import sys
from pathlib import Path

from cy2stab.svg import FIGURES


def main() -> None:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
    out.mkdir(parents=True, exist_ok=True)
    for name, fig in FIGURES.items():
        path = out / f"{name}.svg"
        path.write_text(fig())
        print(path)


if __name__ == "__main__":
    main()
