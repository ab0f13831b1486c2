import type { Button, Drawables } from './protocol.js';

// Everything the UI may ask of the engine. One method per bridge op; the
// session layer guarantees at most one state-changing call per pointer event.
export interface Engine {
  load(text: string): Promise<{ ok: boolean; error?: string }>;
  catch(x: number, y: number, button: Button): Promise<boolean>;
  moving(x: number, y: number): Promise<boolean>;
  release(): Promise<void>;
  cursor(x: number, y: number): Promise<string>;
  drawables(): Promise<Drawables>;
  save(): Promise<string>;
  bodyAt(x: number, y: number): Promise<number | null>;
  toTop(entry: number): Promise<void>;
}

export interface Reply {
  ok: boolean;
  error?: string;
  [key: string]: unknown;
}

/**
 * Engine calls as JSON request/reply objects over some transport. Subclasses
 * only provide `rpc`; the op payloads and reply shapes live here so the
 * subprocess and HTTP transports cannot drift apart.
 */
export abstract class JsonEngine implements Engine {
  abstract rpc(req: Record<string, unknown>): Promise<Reply>;

  // Ops other than load treat an engine-side failure as a bug: the session
  // never issues them before a scene is in place.
  private async must(req: Record<string, unknown>): Promise<Reply> {
    const reply = await this.rpc(req);
    if (!reply.ok) throw new Error(`engine: ${reply.error}`);
    return reply;
  }

  async load(text: string): Promise<{ ok: boolean; error?: string }> {
    const reply = await this.rpc({ op: 'load', text });
    return reply.ok ? { ok: true } : { ok: false, error: reply.error };
  }

  async catch(x: number, y: number, button: Button): Promise<boolean> {
    const reply = await this.must({ op: 'catch', x, y, button });
    return reply.caught as boolean;
  }

  async moving(x: number, y: number): Promise<boolean> {
    const reply = await this.must({ op: 'moving', x, y });
    return reply.changed as boolean;
  }

  async release(): Promise<void> {
    await this.must({ op: 'release' });
  }

  async cursor(x: number, y: number): Promise<string> {
    const reply = await this.must({ op: 'cursor', x, y });
    return reply.hint as string;
  }

  async drawables(): Promise<Drawables> {
    const reply = await this.must({ op: 'drawables' });
    return {
      color: reply.color as string,
      layers: reply.layers as Drawables['layers'],
      order: reply.order as number[],
    };
  }

  async save(): Promise<string> {
    const reply = await this.must({ op: 'save' });
    return reply.text as string;
  }

  async bodyAt(x: number, y: number): Promise<number | null> {
    const reply = await this.must({ op: 'body_at', x, y });
    return reply.entry as number | null;
  }

  async toTop(entry: number): Promise<void> {
    await this.must({ op: 'to_top', entry });
  }
}
