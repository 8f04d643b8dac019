import socket
import threading
from abc import ABC, abstractmethod
from typing import Optional

from oblivagg.data_models.enum import TransportEnum
from oblivagg.data_models.messages import Frame
from oblivagg.errors import CodecError
from oblivagg.transport.codec import decode_frame, encode_frame, read_frame


class Channel(ABC):
    """Moves frames from one party to another.

    Attributes:
        frames (int): number of frames transferred.
        n_bytes (int): number of bytes transferred, headers included.
    """

    def __init__(self):
        self.frames = 0
        self.n_bytes = 0

    def transfer(self, frame: Frame) -> Frame:
        """Encodes the frame, moves the bytes and decodes them on the receiving end."""
        data = encode_frame(frame)
        received = self._transfer(data)
        self.frames += 1
        self.n_bytes += len(data)
        return received

    @abstractmethod
    def _transfer(self, data: bytes) -> Frame:
        pass

    def close(self) -> None:
        pass

    def __enter__(self) -> "Channel":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


class SimulatedChannel(Channel):
    """In-process channel, the bytes never leave the interpreter."""

    def _transfer(self, data: bytes) -> Frame:
        return decode_frame(data)


def _recv_exactly(sock: socket.socket, n: int) -> bytes:
    chunks = []
    remaining = n
    while remaining > 0:
        chunk = sock.recv(min(remaining, 1 << 16))
        if not chunk:
            raise CodecError(f"stream closed with {remaining} of {n} bytes outstanding")
        chunks.append(chunk)
        remaining -= len(chunk)
    return b"".join(chunks)


class StreamChannel(Channel):
    """Frames over a connected pair of stream sockets.

    The sender writes from a helper thread so frames larger than the socket
    buffer cannot block the reader.
    """

    def __init__(self):
        super().__init__()
        self._tx, self._rx = socket.socketpair()

    def _transfer(self, data: bytes) -> Frame:
        error: Optional[BaseException] = None

        def send():
            nonlocal error
            try:
                self._tx.sendall(data)
            except OSError as err:
                error = err

        sender = threading.Thread(target=send, daemon=True)
        sender.start()
        frame = read_frame(lambda n: _recv_exactly(self._rx, n))
        sender.join()
        if error is not None:
            raise error
        return frame

    def close(self) -> None:
        for sock in (self._tx, self._rx):
            try:
                sock.shutdown(socket.SHUT_RDWR)
            except OSError:
                pass
            sock.close()


CHANNEL_MAP = {
    TransportEnum.SIM: SimulatedChannel,
    TransportEnum.STREAM: StreamChannel,
}


def make_channel(transport: TransportEnum) -> Channel:
    return CHANNEL_MAP[transport]()
