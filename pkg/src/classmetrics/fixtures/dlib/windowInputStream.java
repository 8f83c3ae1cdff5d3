package dlib;

import java.io.*;

public class windowInputStream extends InputStream
{
    private byte[] buffer;
    private int head;
    private int count;

    public windowInputStream (int size)
    {
        buffer = new byte[size];
        head = 0;
        count = 0;
    }

    public int read ()
    {
        if (count == 0)
        {
            return( -1 );
        }
        int b = buffer[head];
        head = (head + 1) % buffer.length;
        count = count - 1;
        return( b );
    }

    public int available ()
    {
        return( count );
    }

    public synchronized void push (byte b)
    {
        while (count >= buffer.length)
        {
            grow();
        }
        buffer[(head + count) % buffer.length] = b;
        count = count + 1;
    }

    private void grow ()
    {
        byte[] bigger = new byte[buffer.length * 2];
        System.arraycopy(buffer, 0, bigger, 0, buffer.length);
        buffer = bigger;
    }
}
