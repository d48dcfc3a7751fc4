"""
Vertex Energy Toolkit - Main Entry Point

    python main.py energy graph.txt
    python main.py charpoly graph.txt
    python main.py verify alternation --seed 42 --out alternation.csv
    python main.py sweep-star tree.txt --vertex 0 --n 1,2,4,8
"""
import sys

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
