"""Round-trip constructions and seeds through their JSON file formats.

Saved files are deterministic: building the same object twice produces
byte-identical JSON, which makes the files safe to diff and cache.
Everything the verifiers need travels with the file, so a loaded
construction re-verifies without access to the code that built it.
"""

import tempfile
from pathlib import Path

from kakeya.construction import (
    assemble,
    load_kakeya,
    load_seed,
    save_kakeya,
    save_seed,
)
from kakeya.seeds import dual_conic_seed
from kakeya.verify import verify_all


def main():
    with tempfile.TemporaryDirectory() as tmp:
        seed_path = Path(tmp) / "seed.json"
        save_seed(dual_conic_seed(5), seed_path)
        print(f"seed file: {seed_path.stat().st_size} bytes")

        K = assemble(load_seed(seed_path), 3)
        kak_path = Path(tmp) / "kakeya.json"
        save_kakeya(K, kak_path)
        first = kak_path.read_bytes()
        print(f"construction file: {len(first)} bytes")

        save_kakeya(assemble(dual_conic_seed(5), 3), kak_path)
        print(f"deterministic rewrite: {kak_path.read_bytes() == first}")

        loaded = load_kakeya(kak_path)
        verdicts = {rep.check: rep.verdict for rep in verify_all(loaded, r=1)}
        print(f"verdicts after reload: {verdicts}")


if __name__ == "__main__":
    main()
