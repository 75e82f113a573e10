from .buffer import AudioBuffer, synth_signal
from .wavio import WavSpec, read_wav, spec_for, write_wav

__all__ = ["AudioBuffer", "WavSpec", "read_wav", "spec_for", "synth_signal", "write_wav"]
