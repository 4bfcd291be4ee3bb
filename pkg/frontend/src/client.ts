// Thin websocket wrapper: serializes client commands, parses server messages.

import { parseServerMessage, type ServerMessage } from './protocol.js';

export class SessionClient {
  private ws: WebSocket;
  onMessage: (msg: ServerMessage) => void = () => {};
  onOpen: () => void = () => {};
  onClose: () => void = () => {};

  constructor(url: string) {
    this.ws = new WebSocket(url);
    this.ws.addEventListener('open', () => this.onOpen());
    this.ws.addEventListener('close', () => this.onClose());
    this.ws.addEventListener('message', (event) => {
      const msg = parseServerMessage(String(event.data));
      if (msg) this.onMessage(msg);
    });
  }

  send(command: object): void {
    if (this.ws.readyState === WebSocket.OPEN) {
      this.ws.send(JSON.stringify(command));
    }
  }

  close(): void {
    this.ws.close();
  }
}
