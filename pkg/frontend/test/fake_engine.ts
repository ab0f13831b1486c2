import type { Engine } from '../src/engine.js';
import type { Button, Drawables } from '../src/protocol.js';

/** Scripted engine double that logs every call it receives, in order. */
export class FakeEngine implements Engine {
  calls: string[] = [];
  catchResult = false;
  movingResult = false;
  bodyAtResult: number | null = null;
  loadOk = true;
  loadError = 'bad scene';
  hint = 'hand';
  savedText = '{"objects": []}';

  /** Calls that change or probe mover state (not queries for painting). */
  moverCalls(): string[] {
    return this.calls.filter((c) =>
      ['catch', 'moving', 'release', 'cursor'].includes(c.split(' ')[0]!),
    );
  }

  async load(_text: string): Promise<{ ok: boolean; error?: string }> {
    this.calls.push('load');
    return this.loadOk ? { ok: true } : { ok: false, error: this.loadError };
  }

  async catch(x: number, y: number, button: Button): Promise<boolean> {
    this.calls.push(`catch ${x} ${y} ${button}`);
    return this.catchResult;
  }

  async moving(x: number, y: number): Promise<boolean> {
    this.calls.push(`moving ${x} ${y}`);
    return this.movingResult;
  }

  async release(): Promise<void> {
    this.calls.push('release');
  }

  async cursor(x: number, y: number): Promise<string> {
    this.calls.push(`cursor ${x} ${y}`);
    return this.hint;
  }

  async drawables(): Promise<Drawables> {
    this.calls.push('drawables');
    return { color: 'red', layers: [], order: [] };
  }

  async save(): Promise<string> {
    this.calls.push('save');
    return this.savedText;
  }

  async bodyAt(x: number, y: number): Promise<number | null> {
    this.calls.push(`body_at ${x} ${y}`);
    return this.bodyAtResult;
  }

  async toTop(entry: number): Promise<void> {
    this.calls.push(`to_top ${entry}`);
  }
}
