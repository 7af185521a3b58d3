// Exclusive audio preview: starting one sound stops the previous. A factory
// is injected so tests can run without a real media stack.

export interface PreviewAudio {
  play(): Promise<void> | void;
  pause(): void;
  currentTime: number;
  duration: number;
  volume: number;
  addEventListener(type: string, listener: () => void): void;
}

export type AudioFactory = (url: string) => PreviewAudio;

const PREVIEW_VOLUME = 0.6;

export class PreviewPlayer {
  private current: PreviewAudio | null = null;
  private url: string | null = null;

  /** Playback progress callback, 0..1; fires on timeupdate and on stop. */
  onProgress: ((fraction: number) => void) | null = null;

  constructor(private createAudio: AudioFactory) {}

  get playingUrl(): string | null {
    return this.url;
  }

  play(url: string): void {
    this.stop();
    const audio = this.createAudio(url);
    audio.volume = PREVIEW_VOLUME;
    this.current = audio;
    this.url = url;
    audio.addEventListener("timeupdate", () => {
      if (this.current === audio && this.onProgress && audio.duration > 0) {
        this.onProgress(Math.min(1, audio.currentTime / audio.duration));
      }
    });
    audio.addEventListener("ended", () => {
      if (this.current === audio) this.stop();
    });
    const playing = audio.play();
    if (playing && typeof (playing as Promise<void>).catch === "function") {
      (playing as Promise<void>).catch(() => this.stop());
    }
  }

  stop(): void {
    if (!this.current) return;
    this.current.pause();
    this.current = null;
    this.url = null;
    if (this.onProgress) this.onProgress(0);
  }
}

export function browserAudioFactory(url: string): PreviewAudio {
  return new Audio(url);
}
