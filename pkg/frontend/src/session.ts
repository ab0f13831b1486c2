import type { Engine } from './engine.js';
import type { Button, PointerKind } from './protocol.js';

export type RepaintListener = () => void;

/**
 * UI-side state for one editing session.
 *
 * Holds what the engine does not: the recorded event script, the contour
 * visibility flag and the hover cursor. All geometry decisions stay on the
 * engine side; this layer only forwards pointer events and mirrors replies.
 *
 * Every pointer event is recorded and forwarded as exactly one mover call
 * (down -> catch, move -> moving while pressed / cursor query while hovering,
 * up -> release). No synthetic moves are ever injected, so exporting the
 * recorder and replaying it over the initially loaded scene reproduces the
 * live scene.
 */
export class UiSession {
  contoursVisible = false;
  cursorHint = 'default';
  errorBanner: string | null = null;

  private engine: Engine;
  private script: string[] = [];
  private initialText: string | null = null;
  private pressed = false;
  private caught = false;
  private pressX = 0;
  private pressY = 0;
  private repaintListener: RepaintListener | null = null;

  constructor(engine: Engine) {
    this.engine = engine;
  }

  onRepaint(listener: RepaintListener): void {
    this.repaintListener = listener;
  }

  private repaint(): void {
    if (this.repaintListener) this.repaintListener();
  }

  /** Scene text the recorder's script applies to. */
  get loadedSceneText(): string | null {
    return this.initialText;
  }

  get eventCount(): number {
    return this.script.length;
  }

  /**
   * Replace the scene and start a fresh recording. A rejected document only
   * raises the error banner; the previous scene and script stay live.
   */
  async loadScene(text: string): Promise<boolean> {
    const res = await this.engine.load(text);
    if (!res.ok) {
      this.errorBanner = res.error ?? 'scene rejected';
      return false;
    }
    this.errorBanner = null;
    this.initialText = text;
    this.script = [];
    this.pressed = false;
    this.caught = false;
    this.repaint();
    return true;
  }

  async pointer(kind: PointerKind, x = 0, y = 0, button: Button = 'L'): Promise<void> {
    x = Math.round(x);
    y = Math.round(y);
    if (kind === 'down') {
      this.script.push(`down ${x} ${y} ${button}`);
      this.pressed = true;
      this.pressX = x;
      this.pressY = y;
      this.caught = await this.engine.catch(x, y, button);
      if (this.caught) this.repaint();
    } else if (kind === 'move') {
      this.script.push(`move ${x} ${y}`);
      if (this.pressed) {
        // pressed moves always go to the engine, caught or not, exactly as
        // a script replay would feed them
        const changed = await this.engine.moving(x, y);
        if (changed) this.repaint();
      } else {
        this.cursorHint = await this.engine.cursor(x, y);
      }
    } else {
      this.script.push('up');
      const wasPressed = this.pressed;
      const wasCaught = this.caught;
      this.pressed = false;
      this.caught = false;
      await this.engine.release();
      if (wasCaught) {
        this.repaint();
        return;
      }
      if (!wasPressed) return;
      // plain click on a body (nothing caught): raise it to the top of the
      // catch order so the next grab lands on it
      const entry = await this.engine.bodyAt(this.pressX, this.pressY);
      if (entry !== null) {
        await this.engine.toTop(entry);
        this.repaint();
      }
    }
  }

  toggleContours(): void {
    this.contoursVisible = !this.contoursVisible;
    this.repaint();
  }

  /** The recorded session in the replayable script grammar. */
  exportScript(): string {
    return this.script.map((line) => line + '\n').join('');
  }

  saveScene(): Promise<string> {
    return this.engine.save();
  }
}
