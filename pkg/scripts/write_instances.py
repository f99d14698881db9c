"""Regenerate instances/*.json from the built-in fixtures."""
import json
from pathlib import Path

from hochschild.fixtures import (
    STANDARD, augmentation_module, perturb_mu, twisted_dual_numbers,
)
from hochschild.instance import instance_to_dict
from hochschild.rings import QQ

OUT = Path(__file__).resolve().parent.parent / "instances"


def write(name, m, x=None):
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(instance_to_dict(m, x), indent=1) + "\n")
    print(path)


def main():
    OUT.mkdir(exist_ok=True)
    for name, make in STANDARD.items():
        write(name, make())
    write("twisted_dual_numbers_Q", twisted_dual_numbers(QQ))
    dn = STANDARD["dual_numbers_Q"]()
    write("dual_numbers_Q_augmentation", dn, augmentation_module(dn))
    # e_1 * e_1 picks up a stray x-component
    write("perturbed_dual_numbers_Q", perturb_mu(STANDARD["dual_numbers_Q"](), 1, 1))


if __name__ == "__main__":
    main()
