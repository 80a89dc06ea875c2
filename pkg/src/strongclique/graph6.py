"""graph6 text codec, hand-rolled.

Format recap: printable chars 63..126 carry 6 bits each (char - 63).
Header is n itself for n <= 62, else '~' followed by three chars holding
n in 18 bits big-endian (we stop at 64 vertices).  The body is the upper
triangle of the adjacency matrix read column by column (bit (i, j) for
i < j, columns j = 1..n-1), packed MSB-first into 6-bit groups and
zero-padded.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, build_graph

_OPTIONAL_HEADER = ">>graph6<<"


def _check_char(c: str, line: str) -> int:
    x = ord(c) - 63
    if not 0 <= x < 64:
        raise ValueError(f"invalid graph6 character {c!r} in {line!r}")
    return x


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line. Strict: padding bits must be zero and the
    length must match the header exactly."""
    s = line.strip()
    if s.startswith(_OPTIONAL_HEADER):
        s = s[len(_OPTIONAL_HEADER):]
    if not s:
        raise ValueError("empty graph6 line")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 vertex counts above 2^18 not supported")
        if len(s) < 4:
            raise ValueError(f"truncated graph6 header in {line!r}")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | _check_char(c, line)
        body = s[4:]
    else:
        n = _check_char(s[0], line)
        body = s[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} outside supported range 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(
            f"graph6 body length {len(body)} does not match {expect} for n={n} in {line!r}"
        )
    bitstream = 0
    for c in body:
        bitstream = (bitstream << 6) | _check_char(c, line)
    pad = 6 * expect - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise ValueError(f"nonzero padding bits in {line!r}")
    bitstream >>= pad
    pairs = []
    # Walk the column-major upper triangle from the low end: the last bit
    # written is (n-2, n-1), so read pairs in reverse.
    pos = 0
    for j in range(n - 1, 0, -1):
        for i in range(j - 1, -1, -1):
            if (bitstream >> pos) & 1:
                pairs.append((i, j))
            pos += 1
    return build_graph(n, pairs)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bitstream = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j] & ((1 << j) - 1)
        for i in range(j):
            bitstream = (bitstream << 1) | ((col >> i) & 1)
            nbits += 1
    pad = (-nbits) % 6
    bitstream <<= pad
    nbits += pad
    chars = []
    for shift in range(nbits - 6, -6, -6):
        chars.append(chr(((bitstream >> shift) & 63) + 63))
    return head + "".join(chars)


def parse_graph6_lines(text: str) -> list[Graph]:
    """Decode every nonblank line of text as graph6."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
