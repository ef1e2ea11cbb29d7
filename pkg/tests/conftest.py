import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from fct.rootsys import TypeSpec, build_root_system


def rsys(name: str):
    return build_root_system(TypeSpec.parse(name))
