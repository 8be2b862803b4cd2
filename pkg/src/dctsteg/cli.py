"""Command-line interface for the embed/extract pipeline.

stdout carries machine-parseable key=value lines; diagnostics go to stderr.
Exit codes: 0 success, 2 payload too large, 3 I/O or input format error,
4 input is not a (valid) stego artifact.
"""

import argparse
import math
import sys

import numpy as np

from . import engine, framing, huffman
from .errors import BadMagic, PayloadTooLarge, StegError
from .image_io import Image8, read_pgm, write_pgm
from .metrics import psnr


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    return code


def _note(args, message):
    if args.verbose:
        print(message, file=sys.stderr)


def _read_file(path):
    with open(path, "rb") as fh:
        return fh.read()


def _write_file(path, data):
    with open(path, "wb") as fh:
        fh.write(data)


def _load_image8(path):
    img = read_pgm(_read_file(path))
    if not isinstance(img, Image8):
        raise StegError(f"{path}: 16-bit images are not usable here, need 8-bit")
    return img


def _load_stego(path):
    data = _read_file(path)
    if data[:4] == b"DST1":
        return engine.StegoContainer.from_bytes(data)
    if data[:2] == b"P5":
        img = read_pgm(data)
        if not isinstance(img, Image8):
            raise BadMagic(f"{path}: 16-bit PGM cannot be a stego image")
        return img
    raise BadMagic(f"{path}: neither a coefficient container nor a PGM")


def _fmt_db(value):
    return "inf" if math.isinf(value) else f"{value:.4f}"


def cmd_embed(args):
    try:
        cover = _load_image8(args.cover)
        data = _read_file(args.secret)
        if args.secret_kind == "image":
            secret = read_pgm(data)
            if not isinstance(secret, Image8):
                raise StegError(f"{args.secret}: image secrets must be 8-bit PGM")
            frame = framing.build_frame(
                secret.pixels.tobytes(),
                framing.KIND_IMAGE,
                (secret.width, secret.height),
            )
        else:
            frame = framing.build_frame(data)
        _note(args, f"frame of {frame.bit_length} bits into {cover.width}x{cover.height} cover")
        stego, report = engine.embed(cover, frame, args.mode)
        if args.mode == "container":
            _write_file(args.out, stego.to_bytes())
        else:
            _write_file(args.out, write_pgm(stego))
        print(
            f"mode={args.mode} blocks_used={report.blocks_used} "
            f"payload_bits={report.payload_bits} psnr_db={_fmt_db(report.psnr_db)} "
            f"residual_bit_errors={report.spatial_mode_bit_errors}"
        )
        return 0
    except PayloadTooLarge as exc:
        return _fail(2, f"payload too large: {exc}")
    except (StegError, OSError) as exc:
        return _fail(3, exc)


def cmd_extract(args):
    try:
        stego = _load_stego(args.input)
        secret, header = engine.extract(stego)
        if header.secret_kind == framing.KIND_IMAGE:
            pixels = np.frombuffer(secret, dtype=np.uint8).reshape(
                header.secret_height, header.secret_width
            )
            _write_file(args.out, write_pgm(Image8(pixels)))
            kind = "image"
        else:
            _write_file(args.out, secret)
            kind = "bytes"
        print(
            f"secret_kind={kind} secret_bytes={len(secret)} "
            f"secret_width={header.secret_width} secret_height={header.secret_height} "
            f"payload_bits={header.payload_bit_length}"
        )
        return 0
    except OSError as exc:
        return _fail(3, exc)
    except StegError as exc:
        return _fail(4, exc)


def cmd_capacity(args):
    try:
        cover = _load_image8(args.cover)
        payload = engine.capacity(cover.width, cover.height)
        print(f"raw_slots={cover.width * cover.height} payload_bits={payload}")
        return 0
    except (StegError, OSError) as exc:
        return _fail(3, exc)


def cmd_psnr(args):
    try:
        first = _load_image8(args.a)
        second = _load_image8(args.b)
        score = psnr(first, second)
        print(f"psnr_db={_fmt_db(score.psnr_db)} mse={score.mse:.6f}")
        return 0
    except (StegError, OSError) as exc:
        return _fail(3, exc)


def cmd_inspect(args):
    try:
        stego = _load_stego(args.input)
        if isinstance(stego, engine.StegoContainer):
            coeffs = stego.coeffs
        else:
            from . import blockdct

            coeffs = blockdct.quantize(blockdct.forward_dct(blockdct.partition(stego)))
        bits = huffman.Bitstream(engine.get_lsb(coeffs).reshape(-1).astype(np.uint8))
        header, table, payload = framing.parse_frame(bits)
        symbols = int(np.count_nonzero(table.code_lengths))
        print(
            f"magic=0x{header.magic:04x} version={header.version} "
            f"secret_kind={header.secret_kind} secret_width={header.secret_width} "
            f"secret_height={header.secret_height} symbol_count={header.symbol_count} "
            f"payload_bits={header.payload_bit_length} table_symbols={symbols} "
            f"max_code_length={table.max_length}"
        )
        return 0
    except OSError as exc:
        return _fail(3, exc)
    except StegError as exc:
        return _fail(4, exc)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dctsteg",
        description="Hide byte or image secrets in coefficient LSBs of PGM covers.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="progress diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a secret inside a cover image")
    p.add_argument("--cover", required=True, help="8-bit block-aligned PGM")
    p.add_argument("--secret", required=True, help="file to hide")
    p.add_argument("--secret-kind", choices=("bytes", "image"), default="bytes")
    p.add_argument("--mode", choices=("container", "spatial8"), default="container")
    p.add_argument("--out", required=True, help="output artifact path")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover the secret from a stego artifact")
    p.add_argument("--in", dest="input", required=True, help=".dsc container or stego PGM")
    p.add_argument("--out", required=True, help="recovered secret path")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("capacity", help="payload budget of a cover")
    p.add_argument("--cover", required=True)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("psnr", help="fidelity between two images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_psnr)

    p = sub.add_parser("inspect", help="dump frame header and table stats")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_inspect)
    return parser


def entry(argv=None):
    args = _build_parser().parse_args(argv)
    return args.func(args)
