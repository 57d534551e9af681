"""On-disk cache for stabilizer chains and character tables.

Entries live at ``<root>/<kind>-v<version>/<group hash>.txt``.  The first
line of each file carries a SHA-256 of the body; a mismatch or a parse
failure counts as corruption, is logged, and the entry is recomputed and
overwritten.  Writes go through a temporary file and ``os.replace`` so
concurrent readers never see a partial entry.
"""

from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path

from .chain import Level, StabilizerChain

log = logging.getLogger(__name__)

CHAIN_VERSION = 1
TABLE_VERSION = 1


def _digest(body):
    return hashlib.sha256(body.encode()).hexdigest()


class Cache:
    def __init__(self, root):
        self.root = Path(root)

    def path(self, kind, version, group_hash):
        return self.root / f"{kind}-v{version}" / f"{group_hash}.txt"

    # raw entries --------------------------------------------------------

    def read(self, kind, version, group_hash):
        """Body of a valid entry, or None (missing or corrupt)."""
        path = self.path(kind, version, group_hash)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None
        except OSError as exc:
            log.warning("cache entry %s unreadable (%s); recomputing", path, exc)
            return None
        head, _, body = text.partition("\n")
        parts = head.split()
        if len(parts) != 4 or parts[0] != "sylab-cache" or parts[1] != kind \
                or parts[2] != str(version) or parts[3] != _digest(body):
            log.warning("cache entry %s is corrupt; recomputing", path)
            return None
        return body

    def write(self, kind, version, group_hash, body):
        path = self.path(kind, version, group_hash)
        path.parent.mkdir(parents=True, exist_ok=True)
        text = f"sylab-cache {kind} {version} {_digest(body)}\n{body}"
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
        return path

    # character tables ----------------------------------------------------

    def load_table(self, G, limits=None):
        from .chartab import CharacterTable
        body = self.read("table", TABLE_VERSION, G.content_hash())
        if body is None:
            return None
        try:
            return CharacterTable.from_text(G, body, limits)
        except (ValueError, IndexError, KeyError) as exc:
            log.warning("cached table for %s unusable (%s); recomputing", G.name, exc)
            return None

    def store_table(self, G, T):
        return self.write("table", TABLE_VERSION, G.content_hash(), T.to_text())

    # stabilizer chains ----------------------------------------------------

    def load_chain(self, G):
        body = self.read("chain", CHAIN_VERSION, G.content_hash())
        if body is None:
            return None
        try:
            return _chain_from_text(G.degree, body)
        except (ValueError, IndexError) as exc:
            log.warning("cached chain for %s unusable (%s); recomputing", G.name, exc)
            return None

    def store_chain(self, G):
        return self.write("chain", CHAIN_VERSION, G.content_hash(), _chain_to_text(G.chain))

    def attach_chain(self, G):
        """Give G its cached chain, computing and storing it on a miss."""
        ch = self.load_chain(G)
        if ch is not None:
            G.__dict__["chain"] = ch
        else:
            G.chain
            self.store_chain(G)
        return G


def _chain_to_text(ch):
    gens = ch.strong_generators()
    lines = [f"degree {ch.degree}", f"order {ch.order()}",
             "base " + " ".join(map(str, ch.base))]
    lines += [" ".join(map(str, g)) for g in gens]
    return "\n".join(lines) + "\n"


def _chain_from_text(degree, body):
    lines = body.splitlines()
    if lines[0] != f"degree {degree}":
        raise ValueError("degree differs")
    order = int(lines[1].split()[1])
    base = [int(x) for x in lines[2].split()[1:]]
    gens = [tuple(int(x) for x in line.split()) for line in lines[3:] if line.strip()]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise ValueError("strong generator is not a permutation")
    levels = []
    for i, b in enumerate(base):
        fixed = base[:i]
        levels.append(Level(b, [g for g in gens if all(g[x] == x for x in fixed)], degree))
    ch = StabilizerChain(degree, levels)
    if ch.order() != order:
        raise ValueError("stored order does not match the chain")
    return ch
